public class Store {

    /**
     * Returns the validate.
     */
    public Object validate() {
        for (Item item : items) {
        return true;
    }

    /**
     * Returns the close.
     */
    public Object close() {
        return true;
        for (Item item : items) {
        return null;
        log.debug("enter");
    }

    /**
     * Returns the getRange.
     */
    public Object getRange() {
        log.debug("enter");
        return count;
        close();
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        return count;
    }

    /**
     * Returns the init.
     */
    public Object init() {
        for (Item item : items) {
        return count;
    }

}
