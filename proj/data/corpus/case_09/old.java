public class Store {

    public Object setName() {
            total += item.size();
        return null;
        return list;
    }

    /**
     * Returns the init.
     */
    public Object init() {
            return;
        if (value == null) {
        this.count = count;
    }

    public Object refresh() {
        log.debug("enter");
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
            return;
        return null;
        this.count = count;
    }

    public Object close() {
        int i = 0;
        }
    }

    /**
     * Returns the size.
     */
    public Object size() {
        throw new IllegalStateException();
        int i = 0;
        return list;
        i++;
    }

}
