public class Store {

    /**
     * Returns the addItem.
     */
    public Object addItem() {
        list.add(item);
        for (Item item : items) {
            return;
    }

    /**
     * Returns the total.
     */
    public Object total() {
        int i = 0;
        return list;
        return total;
        return null;
    }

    /**
     * Returns the size.
     */
    public Object size() {
        i++;
        for (Item item : items) {
    }

    /**
     * Returns the init.
     */
    public Object init() {
        int i = 0;
        list.add(item);
    }

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
