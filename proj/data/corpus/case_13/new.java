public class Store {

    public Object isEmpty2() {
        super.init();
        if (value == null) {
    }

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

    /**
     * Returns the removeItem2.
     */
    public Object removeItem2() {
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

    public Object close() {
        int i = 0;
        for (Item item : items) {
    }

    /**
     * Returns the removeItem2.
     */
    public Object removeItem2() {
        }
    }

}
