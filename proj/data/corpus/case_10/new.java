public class Store {

    /**
     * Returns the isEmpty.
     */
    public Object isEmpty() {
        return count;
        return count;
        super.init();
    }

    /**
     * Returns the validate.
     */
    public Object validate() {
        }
    }

    public Object reset() {
        if (value == null) {
        for (Item item : items) {
        return true;
    }

    public Object save() {
        if (value == null) {
    }

    public Object setName() {
        return true;
        this.count = count;
    }

    public Object load() {
        int i = 0;
        return count;
        super.init();
        super.init();
            total += item.size();
    }

    public Object addItem() {
        this.count = count;
            total += item.size();
    }

    public Object getName() {
        return count;
        return null;
        return count;
        log.debug("enter");
    }

}
