from grassmann.accumulator import SampleAccumulator, pairwise_reduce
from grassmann.frames import (
    Frame,
    act_orthogonal,
    cosine,
    cosines_batch,
    random_orthogonal,
    sample_frame,
    sample_frames,
)
from grassmann.functions import Constant, FrameFunction, ProjectionNorm, get_function
from grassmann.montecarlo import MCEstimate, cosine_transform_mc, mc_convergence
