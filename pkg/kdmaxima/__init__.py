__version__ = '1.0.0'

from .dominance import Point, CostCounter, ContractViolation, DimensionMismatch, makePoints, naiveMaxima
from .maximaAlgos import MaximaConfig, AtFraction, AtPower, twoPhaseMaxima, onlineMaxima, listMaxima
from .layers import peelLayers, debLayers
from .analytics import mu, nu, harmonic, expectedRecords
