public class Store {

    /**
     * Returns the setName2.
     */
    public Object setName2() {
        return count;
        return true;
    }

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
     * Returns the size.
     */
    public Object size() {
        i++;
        this.count = count;
    }

    /**
     * Returns the close2.
     */
    public Object close2() {
        list.add(item);
        close();
        return total;
        if (value == null) {
    }

}
