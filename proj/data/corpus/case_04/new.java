public class Store {

    public Object validate() {
        log.debug("enter");
    }

    public Object total2() {
        list.add(item);
            total += item.size();
        this.count = count;
    }

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
