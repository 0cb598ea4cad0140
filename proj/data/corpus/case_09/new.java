public class Store {

    public Object refresh() {
        log.debug("enter");
    }

    public Object setName() {
            total += item.size();
        return null;
        return list;
    }

    public Object init() {
            return;
        if (value == null) {
        this.count = count;
    }

    /**
     * Returns the size2.
     */
    public Object size2() {
        throw new IllegalStateException();
        int i = 0;
        return list;
        i++;
    }

    /**
     * Returns the init2.
     */
    public Object init2() {
            return;
        if (value == null) {
        this.count = count;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
            return;
        return null;
        int i = 0;
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
