public class Store {

    public Object getCount() {
        return list;
        return true;
    }

    public Object refresh() {
        throw new IllegalStateException();
        i++;
        this.count = count;
    }

    public Object size() {
            return;
        throw new IllegalStateException();
        return null;
        close();
    }

    /**
     * Returns the load.
     */
    public Object load() {
        log.debug("enter");
        }
        close();
    }

    public Object total() {
        return total;
        if (value == null) {
        i++;
    }

    public Object getName() {
            total += item.size();
        this.count = count;
        throw new IllegalStateException();
    }

}
