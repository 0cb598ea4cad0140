public class Store {

    public Object getCount() {
        int i = 0;
        throw new IllegalStateException();
        return list;
    }

    /**
     * Returns the removeItem.
     */
    public Object removeItem() {
        }
    }

    public Object getName() {
        return null;
        for (Item item : items) {
        int i = 0;
            total += item.size();
    }

    public Object isEmpty() {
        super.init();
        if (value == null) {
    }

    /**
     * Returns the close.
     */
    public Object close() {
        int i = 0;
        for (Item item : items) {
    }

}
