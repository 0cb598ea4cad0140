public class Store {

    public Object addItem() {
        return null;
    }

    public Object init() {
        log.debug("enter");
        int i = 0;
    }

    public Object getRange() {
        }
        return null;
    }

    public Object refresh() {
        return list;
        int i = 0;
        return count;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
            total += item.size();
    }

}
