# coding=utf-8
"""Text SVG drawings of the quadrilateral and its circumcircle."""
from ladybug_geometry.geometry2d import Point2D

from .floatgeometry import FloatQuadConstruction

CANVAS_WIDTH = 800
CANVAS_HEIGHT = 600
MARGIN = 0.1

LABELS = {'Gamma': u'Γ', 'B': 'B', 'Gamma2': u'Γ₂',
          'Gamma1': u'Γ₁', 'A': 'A'}


def _num(value):
    """Format a canvas coordinate with two decimals."""
    return '{:.2f}'.format(value)


class SVGPolygon(object):
    """A closed polygon outline."""
    __slots__ = ('points', 'stroke', 'width')

    def __init__(self, points, stroke='black', width=2):
        self.points = points
        self.stroke = stroke
        self.width = width

    def __str__(self):
        pts = ' '.join('{},{}'.format(_num(x), _num(y)) for x, y in self.points)
        return '<polygon points="{}" fill="none" stroke="{}" stroke-width="{}" />'.format(
            pts, self.stroke, self.width)


class SVGLine(object):
    """A straight segment, optionally dashed."""
    __slots__ = ('start', 'end', 'stroke', 'dashed')

    def __init__(self, start, end, stroke='gray', dashed=False):
        self.start = start
        self.end = end
        self.stroke = stroke
        self.dashed = dashed

    def __str__(self):
        dash = ' stroke-dasharray="4 3"' if self.dashed else ''
        return '<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1"{} />'\
            .format(_num(self.start[0]), _num(self.start[1]), _num(self.end[0]),
                    _num(self.end[1]), self.stroke, dash)


class SVGCircle(object):
    """A circle outline, optionally dashed."""
    __slots__ = ('center', 'radius', 'stroke', 'dashed')

    def __init__(self, center, radius, stroke='steelblue', dashed=True):
        self.center = center
        self.radius = radius
        self.stroke = stroke
        self.dashed = dashed

    def __str__(self):
        dash = ' stroke-dasharray="8 6"' if self.dashed else ''
        return '<circle cx="{}" cy="{}" r="{}" fill="none" stroke="{}"{} />'.format(
            _num(self.center[0]), _num(self.center[1]), _num(self.radius),
            self.stroke, dash)


class SVGText(object):
    """A text label anchored at a point."""
    __slots__ = ('position', 'text', 'size')

    def __init__(self, position, text, size=18):
        self.position = position
        self.text = text
        self.size = size

    def __str__(self):
        return '<text x="{}" y="{}" font-size="{}" font-family="serif">{}</text>'.format(
            _num(self.position[0]), _num(self.position[1]), self.size, self.text)


class FigureCanvas(object):
    """An SVG canvas that maps construction coordinates onto pixels.

    The drawing is scaled uniformly to fit inside the canvas with a margin and
    centered. The y axis is flipped so the figure reads as it is constructed.

    Args:
        bound_min: Point2D at the lower left of the region to draw.
        bound_max: Point2D at the upper right of the region to draw.
        width: Canvas width in pixels. (Default: 800).
        height: Canvas height in pixels. (Default: 600).
        margin: Fraction of the canvas kept empty on every side. (Default: 0.1).
    """
    __slots__ = ('width', 'height', 'scale', '_origin', '_offset', 'shapes')

    def __init__(self, bound_min, bound_max, width=CANVAS_WIDTH,
                 height=CANVAS_HEIGHT, margin=MARGIN):
        assert 0 <= margin < 0.5, 'Expected margin in [0, 0.5). Got {}.'.format(margin)
        self.width = width
        self.height = height
        span_x = bound_max.x - bound_min.x
        span_y = bound_max.y - bound_min.y
        if span_x <= 0 or span_y <= 0:
            raise ValueError('Cannot draw a region with zero extent.')
        usable = 1 - 2 * margin
        self.scale = min(width * usable / span_x, height * usable / span_y)
        self._origin = bound_min
        self._offset = ((width - span_x * self.scale) / 2,
                        (height - span_y * self.scale) / 2)
        self.shapes = []

    def to_canvas(self, point):
        """Get the (x, y) pixel position of a Point2D."""
        x = self._offset[0] + (point.x - self._origin.x) * self.scale
        y = self.height - (self._offset[1] + (point.y - self._origin.y) * self.scale)
        return (x, y)

    def draw_polygon(self, points, **kwargs):
        self.shapes.append(SVGPolygon([self.to_canvas(p) for p in points], **kwargs))

    def draw_line(self, start, end, **kwargs):
        self.shapes.append(SVGLine(self.to_canvas(start), self.to_canvas(end), **kwargs))

    def draw_circle(self, center, radius, **kwargs):
        self.shapes.append(SVGCircle(self.to_canvas(center), radius * self.scale,
                                     **kwargs))

    def write_text(self, point, text, dx=6, dy=-6, **kwargs):
        x, y = self.to_canvas(point)
        self.shapes.append(SVGText((x + dx, y + dy), text, **kwargs))

    def __str__(self):
        body = '\n'.join('  {}'.format(shape) for shape in self.shapes)
        return '<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" ' \
            'viewBox="0 0 {0} {1}">\n{2}\n</svg>\n'.format(self.width, self.height, body)


def construction_svg(q, width=CANVAS_WIDTH, height=CANVAS_HEIGHT, margin=MARGIN):
    """Get SVG text drawing the quadrilateral, its circumcircle and the point A.

    Args:
        q: A FloatQuadConstruction or an exact QuadConstruction.
        width: Canvas width in pixels. (Default: 800).
        height: Canvas height in pixels. (Default: 600).
        margin: Fraction of the canvas kept empty on every side. (Default: 0.1).
    """
    if not isinstance(q, FloatQuadConstruction):
        q = FloatQuadConstruction.from_exact(q)
    circle = q.circumcircle
    bound_min = Point2D(circle.c.x - circle.r, circle.c.y - circle.r)
    bound_max = Point2D(circle.c.x + circle.r, circle.c.y + circle.r)
    canvas = FigureCanvas(bound_min, bound_max, width, height, margin)

    g, b, g2, g1 = q.vertices
    canvas.draw_circle(circle.c, circle.r)
    canvas.draw_polygon(q.vertices, stroke='black')
    canvas.draw_line(g, q.a)  # hypotenuse side of the right triangle Gamma-B-A
    canvas.draw_line(g, g2, dashed=True)
    canvas.draw_line(b, g1, dashed=True)

    offsets = {'Gamma': (6, -8), 'B': (-20, -8), 'Gamma2': (8, 18),
               'Gamma1': (8, -8), 'A': (4, 20)}
    for name, pt in zip(('Gamma', 'B', 'Gamma2', 'Gamma1', 'A'), q.vertices + (q.a,)):
        dx, dy = offsets[name]
        canvas.write_text(pt, LABELS[name], dx, dy)
    canvas.write_text(g1, u'θ', -40, 14, size=14)
    canvas.write_text(g2, u'φ', 10, -14, size=14)
    canvas.write_text(q.a, u'ω', -24, -10, size=14)
    return str(canvas)


def write_construction_svg(q, file_path, **kwargs):
    """Write the SVG drawing of a construction to a file and return the file path."""
    with open(file_path, 'w', encoding='utf-8') as svg_file:
        svg_file.write(construction_svg(q, **kwargs))
    return file_path
