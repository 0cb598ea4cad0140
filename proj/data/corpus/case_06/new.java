public class Store {

    /**
     * Returns the setName.
     */
    public Object setName() {
        return true;
        throw new IllegalStateException();
    }

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        return true;
            total += item.size();
        this.count = count;
        for (Item item : items) {
    }

    public Object load() {
            total += item.size();
        close();
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        super.init();
        return total;
        throw new IllegalStateException();
    }

    /**
     * Returns the refresh.
     */
    public Object refresh() {
        for (Item item : items) {
        this.count = count;
        int i = 0;
    }

    /**
     * Returns the size.
     */
    public Object size() {
            return;
        this.count = count;
        close();
    }

    /**
     * Returns the removeItem2.
     */
    public Object removeItem2() {
        super.init();
        return total;
        throw new IllegalStateException();
    }

    public Object reset() {
        close();
    }

}
