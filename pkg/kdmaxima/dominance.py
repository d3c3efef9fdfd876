#!/usr/bin/env python3
"""
points, the dominance order, scalar-comparison accounting, and the brute-force maxima oracle
"""
# standard library modules
import collections
import enum
import logging
import math

logger = logging.getLogger(__name__)


# a point keeps its 0-based position in the original input, so duplicates stay distinct
Point = collections.namedtuple( 'Point', ['coords', 'index'] )


class ContractViolation(ValueError):
    '''raised when a caller breaks a precondition of an operation'''
    pass

class DimensionMismatch(ContractViolation):
    pass


class DominanceOutcome(enum.Enum):
    FirstDominates = 'first'
    SecondDominates = 'second'
    Incomparable = 'incomparable'
    Equal = 'equal'


class CostCounter(object):
    '''tally of scalar comparisons and Dominated-procedure invocations for one run'''
    def __init__( self ):
        self.scalarComparisons = 0
        self.dominatedCalls = 0

    def __repr__( self ):
        return 'CostCounter(scalarComparisons=%d, dominatedCalls=%d)' % (
            self.scalarComparisons, self.dominatedCalls )

    def asDict( self ):
        return {'scalarComparisons': self.scalarComparisons,
            'dominatedCalls': self.dominatedCalls }


def makePoint( coords, index ):
    '''returns a Point with float coords; rejects empty, NaN, and infinite input'''
    values = tuple( float(x) for x in coords )
    if not values:
        raise ContractViolation( 'point %d has no coordinates' % index )
    for value in values:
        if not math.isfinite( value ):
            raise ContractViolation( 'point %d has a non-finite coordinate (%s)' % (index, value) )
    return Point( values, index )

def makePoints( rows ):
    '''converts a sequence of coordinate rows to Points indexed by position; enforces one dimensionality'''
    points = []
    dim = None
    for index, row in enumerate( rows ):
        point = makePoint( row, index )
        if dim is None:
            dim = len( point.coords )
        elif len( point.coords ) != dim:
            raise DimensionMismatch( 'point %d has %d coordinates, expected %d'
                % (index, len( point.coords ), dim) )
        points.append( point )
    return points

def negated( point ):
    '''the same point with every coordinate negated (maxima of negated points are minima)'''
    return Point( tuple( -x for x in point.coords ), point.index )


def dominatesVec( a, b, counter ):
    '''true iff coordinate vector a dominates b; stops at the first coordinate where a is smaller'''
    if len( a ) != len( b ):
        raise DimensionMismatch( 'cannot compare %d-d with %d-d' % (len( a ), len( b )) )
    strict = False
    nCompared = 0
    for x, y in zip( a, b ):
        nCompared += 1
        if x < y:
            counter.scalarComparisons += nCompared
            return False
        if x > y:
            strict = True
    counter.scalarComparisons += nCompared
    return strict

def dominates( p, q, counter ):
    '''true iff point p dominates point q'''
    return dominatesVec( p.coords, q.coords, counter )

def compare( p, q, counter ):
    '''classifies an ordered pair in one pass, stopping once both directions have been seen'''
    a = p.coords
    b = q.coords
    if len( a ) != len( b ):
        raise DimensionMismatch( 'cannot compare %d-d with %d-d' % (len( a ), len( b )) )
    pGreater = qGreater = False
    nCompared = 0
    for x, y in zip( a, b ):
        nCompared += 1
        if x > y:
            pGreater = True
            if qGreater:
                break
        elif x < y:
            qGreater = True
            if pGreater:
                break
    counter.scalarComparisons += nCompared
    if pGreater and qGreater:
        return DominanceOutcome.Incomparable
    elif pGreater:
        return DominanceOutcome.FirstDominates
    elif qGreater:
        return DominanceOutcome.SecondDominates
    return DominanceOutcome.Equal

def naiveMaxima( points, counter ):
    '''pairwise maxima: each point is kept unless some other point dominates it'''
    maxima = []
    for i, p in enumerate( points ):
        pc = p.coords
        for j, q in enumerate( points ):
            if i != j and dominatesVec( q.coords, pc, counter ):
                break
        else:
            maxima.append( p )
    logger.debug( 'naiveMaxima found %d of %d', len( maxima ), len( points ) )
    return maxima
