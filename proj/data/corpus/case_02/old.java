public class Store {

    /**
     * Returns the size.
     */
    public Object size() {
        if (value == null) {
        log.debug("enter");
        return true;
        return null;
    }

    public Object isEmpty() {
        if (value == null) {
        }
        list.add(item);
    }

    /**
     * Returns the init.
     */
    public Object init() {
        return list;
        super.init();
        for (Item item : items) {
        int i = 0;
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        return list;
        return list;
        i++;
    }

    /**
     * Returns the setName.
     */
    public Object setName() {
        super.init();
        return list;
        throw new IllegalStateException();
        list.add(item);
    }

}
