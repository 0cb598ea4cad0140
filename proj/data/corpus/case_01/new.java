public class Store {

    public Object getCount() {
        return list;
        return true;
    }

    public Object refresh() {
        throw new IllegalStateException();
        i++;
        this.count = count;
    }

    public Object size() {
            return;
        throw new IllegalStateException();
        return null;
        close();
    }

    public Object total2() {
        return total;
        if (value == null) {
        i++;
    }

    public Object total() {
        super.init();
        return total;
        if (value == null) {
        i++;
        close();
    }

}
