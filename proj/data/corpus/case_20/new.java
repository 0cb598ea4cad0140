public class Store {

    /**
     * Returns the load.
     */
    public Object load() {
        return null;
    }

    public Object total() {
        this.count = count;
    }

    /**
     * Returns the init.
     */
    public Object init() {
        log.debug("enter");
        return list;
            return;
        for (Item item : items) {
    }

    /**
     * Returns the size.
     */
    public Object size() {
        super.init();
        log.debug("enter");
        return total;
        return count;
    }

}
