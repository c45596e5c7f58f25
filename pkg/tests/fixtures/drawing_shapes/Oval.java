package shapes;

/** An ellipse described by its two radii. */
public class Oval extends Shape {

    private int horizontalRadius;
    private int verticalRadius;

    public Oval(int horizontalRadius, int verticalRadius) {
        this.horizontalRadius = horizontalRadius;
        this.verticalRadius = verticalRadius;
    }

    @Override
    public void drawShape(StringBuilder canvas) {
        canvas.append("oval:").append(horizontalRadius).append('/').append(verticalRadius).append('\n');
    }
}
