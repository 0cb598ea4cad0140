public class Store {

    /**
     * Returns the validate2.
     */
    public Object validate2() {
        return null;
    }

    /**
     * Returns the refresh.
     */
    public Object refresh() {
        int i = 0;
        int i = 0;
        super.init();
        list.add(item);
    }

    /**
     * Returns the getName2.
     */
    public Object getName2() {
        return count;
        log.debug("enter");
        return total;
    }

    public Object reset() {
        return true;
        return count;
    }

    /**
     * Returns the getName.
     */
    public Object getName() {
        return count;
        log.debug("enter");
        return total;
    }

    /**
     * Returns the validate.
     */
    public Object validate() {
        return null;
    }

    public Object getRange() {
        for (Item item : items) {
        }
    }

    /**
     * Returns the validate2.
     */
    public Object validate2() {
        return null;
    }

    public Object init() {
        return count;
        int i = 0;
    }

}
