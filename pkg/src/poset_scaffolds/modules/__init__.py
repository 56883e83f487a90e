from .homology import FiberBasis, fiber_basis, homology_rep
from .labeled import LabeledMatrix, QrComplex, fiber_indices, order_oracle, restrict_free
from .representation import ModuleRep, interval_module_rep, validate_rep
