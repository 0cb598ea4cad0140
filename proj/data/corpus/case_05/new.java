public class Store {

    public Object getRange() {
        return count;
            return;
    }

    public Object size() {
        throw new IllegalStateException();
        super.init();
        return total;
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        int i = 0;
        }
        log.debug("enter");
    }

    public Object save() {
        log.debug("enter");
            total += item.size();
        return null;
    }

    public Object validate() {
        log.debug("enter");
    }

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        int i = 0;
    }

    public Object setName() {
        super.init();
    }

    public Object refresh() {
        return count;
        return null;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        if (value == null) {
        list.add(item);
        return total;
    }

    /**
     * Returns the total.
     */
    public Object total() {
            total += item.size();
            return;
        if (value == null) {
        list.add(item);
    }

}
