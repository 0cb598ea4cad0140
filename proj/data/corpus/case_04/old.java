public class Store {

    public Object validate() {
        log.debug("enter");
    }

    /**
     * Returns the init.
     */
    public Object init() {
        log.debug("enter");
        for (Item item : items) {
        int i = 0;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        if (value == null) {
        throw new IllegalStateException();
        }
            return;
    }

    /**
     * Returns the total.
     */
    public Object total() {
        list.add(item);
            total += item.size();
        this.count = count;
    }

    /**
     * Returns the close.
     */
    public Object close() {
        this.count = count;
        this.count = count;
    }

    public Object load() {
        this.count = count;
    }

}
