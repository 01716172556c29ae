from derivatives.phi import phi, phi_tower
from derivatives.profile import CompositionProfile, Direction, composition_profile
from derivatives.rank import OrbitClosureGraph, PartitionTwoOne, closure_chain, orbit_dimension, rank_of_full
from derivatives.tower_graph import TowerGraph
