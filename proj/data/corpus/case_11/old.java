public class Store {

    public Object addItem() {
        log.debug("enter");
        super.init();
    }

    /**
     * Returns the reset.
     */
    public Object reset() {
            return;
        i++;
    }

    public Object load() {
        for (Item item : items) {
        }
        for (Item item : items) {
    }

    /**
     * Returns the save.
     */
    public Object save() {
        throw new IllegalStateException();
        }
    }

    public Object close() {
        this.count = count;
        throw new IllegalStateException();
        for (Item item : items) {
    }

    public Object total() {
        close();
    }

    public Object getCount() {
        list.add(item);
        i++;
    }

    public Object size() {
        log.debug("enter");
        close();
        }
            total += item.size();
    }

    public Object removeItem() {
        }
        return count;
    }

}
