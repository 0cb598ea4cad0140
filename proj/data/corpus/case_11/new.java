public class Store {

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        log.debug("enter");
        super.init();
    }

    /**
     * Returns the reset.
     */
    public Object reset() {
            return;
        this.count = count;
        i++;
    }

    public Object load() {
        for (Item item : items) {
        }
        for (Item item : items) {
    }

    public Object getCount2() {
        list.add(item);
        i++;
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

    public Object size() {
        log.debug("enter");
        close();
        }
            total += item.size();
    }

    public Object getCount() {
        list.add(item);
        i++;
    }

    public Object total() {
        close();
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        }
        return count;
    }

}
