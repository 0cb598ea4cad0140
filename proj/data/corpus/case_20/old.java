public class Store {

    /**
     * Returns the close.
     */
    public Object close() {
            return;
        for (Item item : items) {
            return;
    }

    public Object getRange() {
        close();
        for (Item item : items) {
        close();
        return count;
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
     * Returns the load.
     */
    public Object load() {
        return null;
    }

    public Object size() {
        super.init();
        log.debug("enter");
        return total;
        return count;
    }

}
