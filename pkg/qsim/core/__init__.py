from .collection import QuantumRegisterCollection
from .computer import BlochCoords, QuantumComputer
from .register import QuantumRegister
from .reorder import reorder, swap, swap_helper, validate_requested_order
