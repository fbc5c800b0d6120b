"""Graphs drawn in the reference figures, with the values printed beside them."""

from perronmax.graph import Graph

FIG1_SEQ = (4, 4, 3, 3, 2, 1, 1)
FIG1_LEFT = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (3, 6)])
FIG1_RIGHT = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (4, 6)])
FIG1_LEFT_LAMBDA = 3.0918
FIG1_RIGHT_LAMBDA = 3.1732
FIG1_LEFT_F = (0.5291, 0.5291, 0.3823, 0.3823, 0.3423, 0.1236, 0.1236)
FIG1_RIGHT_F = (0.5068, 0.5023, 0.4643, 0.4643, 0.1773, 0.1583, 0.0559)

FIG2_SEQ = (4, 4, 3, 3, 3, 3, 2, 2, 2) + (1,) * 10
FIG2_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 8), (2, 9),
    (3, 10), (3, 11), (4, 12), (4, 13), (5, 14), (5, 15), (6, 16), (7, 17), (8, 18),
]

FIG3_SEQ = (3, 3, 3, 2, 2, 1, 1, 1, 1, 1)
# 1-based labels in the drawing, shifted down by one
FIG3_LEFT = Graph(10, [(0, 1), (0, 2), (0, 3), (1, 4), (3, 5), (4, 6), (4, 7), (5, 8), (5, 9)])
FIG3_RIGHT = Graph(10, [(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 8), (4, 9)])
FIG3_LEFT_LAMBDA = 2.1010
FIG3_RIGHT_LAMBDA = 2.1067

CAPTION_TOL = 5e-4
