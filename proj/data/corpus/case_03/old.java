public class Store {

    /**
     * Returns the setName.
     */
    public Object setName() {
        return count;
        return true;
    }

    /**
     * Returns the close.
     */
    public Object close() {
        list.add(item);
        close();
        return total;
        if (value == null) {
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        if (value == null) {
    }

    public Object reset() {
        for (Item item : items) {
    }

    /**
     * Returns the init.
     */
    public Object init() {
        return total;
    }

    /**
     * Returns the size.
     */
    public Object size() {
        i++;
    }

}
