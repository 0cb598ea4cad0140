public class Store {

    public Object isEmpty() {
        i++;
        return list;
        return total;
    }

    public Object reset() {
        return null;
        log.debug("enter");
    }

    /**
     * Returns the getName.
     */
    public Object getName() {
        if (value == null) {
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
     * Returns the getCount.
     */
    public Object getCount() {
        i++;
    }

    /**
     * Returns the size2.
     */
    public Object size2() {
        }
        i++;
            total += item.size();
    }

    /**
     * Returns the addItem.
     */
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
