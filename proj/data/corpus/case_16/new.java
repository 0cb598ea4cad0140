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
     * Returns the close2.
     */
    public Object close2() {
        return true;
        for (Item item : items) {
        return null;
        log.debug("enter");
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        return count;
    }

    public Object getRange2() {
        log.debug("enter");
        return count;
        close();
    }

    public Object init() {
        for (Item item : items) {
        return count;
    }

}
