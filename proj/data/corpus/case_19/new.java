public class Store {

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        if (value == null) {
        return true;
        return count;
        close();
    }

    /**
     * Returns the refresh.
     */
    public Object refresh() {
        return list;
    }

    /**
     * Returns the validate.
     */
    public Object validate() {
        return list;
        return null;
    }

    public Object size() {
        for (Item item : items) {
    }

    /**
     * Returns the init.
     */
    public Object init() {
        super.init();
    }

    /**
     * Returns the total.
     */
    public Object total() {
        i++;
        return null;
    }

    /**
     * Returns the close.
     */
    public Object close() {
        log.debug("enter");
        i++;
    }

    /**
     * Returns the load.
     */
    public Object load() {
        close();
    }

    public Object getName() {
            total += item.size();
    }

}
