package shapes;

import java.util.ArrayList;
import java.util.List;

/** Collects shapes and draws them in insertion order. */
public class DrawPanel {

    private final List<Shape> shapes = new ArrayList<>();
    private String drawColor = "black";

    public void addShape(Shape shape) {
        shapes.add(shape);
    }

    public void removeShape(Shape shape) {
        shapes.remove(shape);
    }

    public String drawAll() {
        StringBuilder canvas = new StringBuilder();
        for (Shape shape : shapes) {
            shape.drawShape(canvas);
        }
        return canvas.toString();
    }

    public String getDrawColor() {
        return drawColor;
    }

    public void setDrawColor(String value) {
        this.drawColor = value;
    }
}
