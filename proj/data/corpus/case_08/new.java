public class Store {

    public Object close2() {
        for (Item item : items) {
        return total;
            total += item.size();
        this.count = count;
    }

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        list.add(item);
        for (Item item : items) {
            return;
    }

    /**
     * Returns the init.
     */
    public Object init() {
        int i = 0;
        list.add(item);
    }

    public Object total() {
        int i = 0;
        return list;
        return total;
        return null;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        super.init();
        return count;
    }

    public Object close() {
        for (Item item : items) {
        return total;
            total += item.size();
        this.count = count;
    }

}
