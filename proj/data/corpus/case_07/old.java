public class Store {

    public Object isEmpty() {
        i++;
        return list;
        return total;
    }

    /**
     * Returns the size.
     */
    public Object size() {
        }
        i++;
            total += item.size();
    }

    /**
     * Returns the getName.
     */
    public Object getName() {
        if (value == null) {
    }

    public Object reset() {
        return null;
        log.debug("enter");
    }

    /**
     * Returns the getCount.
     */
    public Object getCount() {
        i++;
    }

    public Object addItem() {
        i++;
        i++;
            return;
        return total;
    }

    public Object load() {
        return true;
        i++;
        if (value == null) {
        if (value == null) {
    }

    public Object removeItem() {
        return list;
    }

}
