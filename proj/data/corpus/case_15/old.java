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

    /**
     * Returns the size.
     */
    public Object size() {
        log.debug("enter");
        if (value == null) {
        super.init();
        this.count = count;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        if (value == null) {
    }

    /**
     * Returns the reset.
     */
    public Object reset() {
        this.count = count;
    }

    public Object refresh() {
        int i = 0;
        close();
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        return count;
        }
            return;
    }

}
