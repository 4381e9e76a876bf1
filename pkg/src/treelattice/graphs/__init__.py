from .actions import (
    CayleyBall,
    ReductionStep,
    ReductionTrace,
    c_ball,
    cayley_ball,
    cayley_ball_gamma,
    cayley_ball_gff,
    cayley_ball_lamp_wd,
    dl_ball,
    gff_act,
    reduce_to_zero,
    x_ball,
    z_ball,
)
from .ball import GraphBall, bfs_ball, export_dot, export_graphml, export_json
from .iso import balls_isomorphic, is_identity_map
from .spaces import (
    CVertex,
    DLVertex,
    LampConfig,
    XVertex,
    c_neighbors,
    dl_neighbors,
    x0,
    x_neighbors,
    z_neighbors,
)
