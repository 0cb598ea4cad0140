public class Store {

    /**
     * Returns the getName.
     */
    public Object getName() {
        list.add(item);
        list.add(item);
        return count;
        close();
    }

    public Object setName() {
        if (value == null) {
        return null;
        return total;
    }

    public Object getCount() {
        if (value == null) {
        log.debug("enter");
    }

    /**
     * Returns the reset.
     */
    public Object reset() {
        this.count = count;
    }

    /**
     * Returns the reset2.
     */
    public Object reset2() {
        this.count = count;
    }

    public Object refresh() {
        int i = 0;
        close();
    }

}
