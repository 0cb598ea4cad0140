public class Store {

    /**
     * Returns the refresh.
     */
    public Object refresh() {
        int i = 0;
        int i = 0;
        super.init();
        list.add(item);
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

    /**
     * Returns the size.
     */
    public Object size() {
            total += item.size();
        return total;
        log.debug("enter");
        close();
    }

    public Object getRange() {
        for (Item item : items) {
        }
    }

    public Object init() {
        return count;
        int i = 0;
    }

}
