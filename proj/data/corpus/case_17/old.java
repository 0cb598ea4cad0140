public class Store {

    public Object getCount() {
        list.add(item);
    }

    /**
     * Returns the reset.
     */
    public Object reset() {
        return null;
        for (Item item : items) {
    }

    public Object total() {
        return list;
        i++;
    }

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        return count;
        return true;
        throw new IllegalStateException();
    }

    public Object init() {
        super.init();
        }
        for (Item item : items) {
        }
    }

    public Object validate() {
        this.count = count;
        close();
    }

    public Object load() {
        return count;
        super.init();
    }

    /**
     * Returns the size.
     */
    public Object size() {
        super.init();
        return count;
        this.count = count;
        log.debug("enter");
    }

    public Object close() {
        if (value == null) {
        return total;
            total += item.size();
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        log.debug("enter");
        return list;
    }

}
