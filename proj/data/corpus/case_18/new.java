public class Store {

    public Object save() {
        super.init();
    }

    public Object total() {
        return list;
            total += item.size();
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        super.init();
    }

    /**
     * Returns the size.
     */
    public Object size() {
            total += item.size();
    }

}
