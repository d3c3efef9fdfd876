#!/usr/bin/env python3
"""
exact expected numbers of maxima and records for uniform random samples
"""
# standard library modules
import enum
import logging
import math

# third-party modules
import numpy as np
import scipy.special

logger = logging.getLogger(__name__)

# above this, harmonic numbers come from closed forms instead of summation
directSumLimit = 10**6
# documented range for the alternating simplex sum
nuMaxN = 10**9
nuMaxD = 12
cancellationTolerance = 1e-6


class CancellationError(ArithmeticError):
    '''raised when an alternating sum has lost too many digits to be trusted'''
    pass


class ExpectationModel(enum.Enum):
    HypercubeMaxima = 'hypercube-maxima'
    SimplexMaxima = 'simplex-maxima'
    HypercubeRecords = 'hypercube-records'


class ExpectationQuery(object):
    def __init__( self, model, n, d ):
        self.model = ExpectationModel( model )
        _checkPositive( n, 'n' )
        _checkPositive( d, 'd' )
        if self.model is ExpectationModel.SimplexMaxima and d < 2:
            raise ValueError( 'the simplex model needs d >= 2, got %d' % d )
        self.n = n
        self.d = d

    def __repr__( self ):
        return 'ExpectationQuery(%s, n=%d, d=%d)' % (self.model.value, self.n, self.d)

    def evaluate( self ):
        if self.model is ExpectationModel.HypercubeMaxima:
            return mu( self.n, self.d )
        elif self.model is ExpectationModel.SimplexMaxima:
            return nu( self.n, self.d )
        return expectedRecords( self.n, self.d )


def _checkPositive( value, name ):
    if not isinstance( value, (int, np.integer) ) or value < 1:
        raise ValueError( '%s must be a positive integer, got %r' % (name, value) )

def _reciprocalPowers( n, j ):
    return np.power( np.arange( 1, n+1, dtype=np.float64 ), -float(j) )

def harmonic( n, j=1 ):
    '''H_n^(j), the sum of i**-j for i = 1..n'''
    _checkPositive( n, 'n' )
    _checkPositive( j, 'j' )
    if n <= directSumLimit:
        return math.fsum( _reciprocalPowers( n, j ) )
    if j == 1:
        return float( scipy.special.digamma( n + 1 ) + np.euler_gamma )
    return float( scipy.special.zeta( j ) - scipy.special.zeta( j, n + 1 ) )

def mu( n, d ):
    '''expected number of maxima of n uniform points in the d-cube'''
    _checkPositive( n, 'n' )
    _checkPositive( d, 'd' )
    harmonics = [None] + [harmonic( n, j ) for j in range( 1, d )]
    memo = [None, 1.0]
    for k in range( 2, d+1 ):
        total = math.fsum( harmonics[k-j] * memo[j] for j in range( 1, k ) )
        memo.append( total / (k - 1) )
    return memo[d]

def nu( n, d ):
    '''expected number of maxima of n uniform points in the solid d-simplex'''
    _checkPositive( n, 'n' )
    _checkPositive( d, 'd' )
    if d < 2:
        raise ValueError( 'the simplex model needs d >= 2, got %d' % d )
    if n > nuMaxN or d > nuMaxD:
        raise ValueError( 'nu is only evaluated for n <= %d and d <= %d (got n=%d, d=%d)'
            % (nuMaxN, nuMaxD, n, d) )
    terms = []
    for j in range( d ):
        a = (j + 1) / d
        # Gamma(n)/Gamma(n+a) as 1/poch(n, a), accurate for large n
        ratio = 1.0 / scipy.special.poch( n, a )
        term = n * scipy.special.comb( d-1, j, exact=True ) * scipy.special.gamma( a ) * ratio
        terms.append( -term if j % 2 else term )
    total = math.fsum( terms )
    magnitude = math.fsum( abs( t ) for t in terms )
    if total <= 0 or np.finfo( float ).eps * magnitude / total > cancellationTolerance:
        raise CancellationError( 'nu(%d, %d) lost precision: sum %g of terms totalling %g'
            % (n, d, total, magnitude) )
    return total

def harmonicSeries( nMax, j ):
    '''array of H_n^(j) for n = 1..nMax'''
    return np.cumsum( _reciprocalPowers( nMax, j ) )

def muSeries( nMax, d ):
    '''array of mu(n, d) for n = 1..nMax'''
    _checkPositive( nMax, 'nMax' )
    _checkPositive( d, 'd' )
    harmonics = [None] + [harmonicSeries( nMax, j ) for j in range( 1, d )]
    memo = [None, np.ones( nMax )]
    for k in range( 2, d+1 ):
        total = np.zeros( nMax )
        for j in range( 1, k ):
            total += harmonics[k-j] * memo[j]
        memo.append( total / (k - 1) )
    return memo[d]

def expectedRecordsSeries( nMax, d ):
    '''array of the expected number of records among the first n of a uniform d-cube sequence'''
    return np.cumsum( muSeries( nMax, d ) / np.arange( 1, nMax+1 ) )

def expectedRecords( n, d ):
    _checkPositive( n, 'n' )
    _checkPositive( d, 'd' )
    if n > directSumLimit:
        # records of a d-cube sequence are distributed as maxima in the (d+1)-cube
        logger.debug( 'expectedRecords(%d, %d) via mu(n, d+1)', n, d )
        return mu( n, d+1 )
    return float( expectedRecordsSeries( n, d )[-1] )
