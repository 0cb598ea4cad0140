public class Store {

    public Object addItem2() {
        return null;
    }

    public Object getRange() {
        }
        return null;
    }

    public Object init() {
        log.debug("enter");
        int i = 0;
    }

    public Object addItem() {
        return null;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
            total += item.size();
    }

}
