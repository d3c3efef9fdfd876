'''shared fixtures for kdmaxima tests'''
import os
import sys
# third-party modules
import pytest
# kdmaxima modules
try:
    import kdmaxima
except ImportError:
    # set python path for a source checkout, since the package may not be installed
    sys.path.append( os.path.abspath( os.path.join( os.path.dirname( __file__ ), '..' ) ) )
    import kdmaxima
from kdmaxima import dominance


# the 8-point example used throughout; its maxima are (3,9) (5,8) (8,6) (9,2)
planeRows = [(2,7), (3,9), (4,3), (5,8), (7,5), (6,4), (8,6), (9,2)]


def pytest_configure( config ):
    config.addinivalue_line( 'markers', 'slow: large-n or many-trial runs (deselected by pytestQuick.sh)' )

@pytest.fixture
def planePoints():
    return dominance.makePoints( planeRows )
