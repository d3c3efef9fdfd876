#!/usr/bin/env python3
"""
multiple longest common subsequence via layers of dominant matches
"""
# standard library modules
import enum
import logging

# kdmaxima modules
from . import dominance
from . import maximaAlgos

logger = logging.getLogger(__name__)


class MlcsEngine(enum.Enum):
    HakataImai = 'hakata-imai'
    Maxima = 'maxima'


class MatchPoint(object):
    '''1-based positions (one per string) all holding symbol; parent is the match it extends'''
    __slots__ = ('positions', 'symbol', 'parent')

    def __init__( self, positions, symbol, parent=None ):
        self.positions = positions
        self.symbol = symbol
        self.parent = parent

    def __repr__( self ):
        return 'MatchPoint(%s, %r)' % (self.positions, self.symbol)


class SuccessorTable(object):
    '''nextPos[t][c][i] is the smallest position j > i with strings[t][j] == c (1-based), or None'''
    def __init__( self, strings ):
        self.strings = list( strings )
        self.nextPos = []
        for s in self.strings:
            table = {}
            for c in set( s ):
                row = [None] * (len( s ) + 1)
                nxt = None
                for i in range( len( s ), -1, -1 ):
                    row[i] = nxt
                    if i >= 1 and s[i-1] == c:
                        nxt = i
                table[c] = row
            self.nextPos.append( table )

    def next( self, t, c, i ):
        row = self.nextPos[t].get( c )
        return row[i] if row else None

    def successor( self, positions, c ):
        '''the componentwise next match for symbol c, or None if some string has no later c'''
        succ = []
        for t, i in enumerate( positions ):
            row = self.nextPos[t].get( c )
            j = row[i] if row else None
            if j is None:
                return None
            succ.append( j )
        return tuple( succ )


class LcsResult(object):
    def __init__( self, length, witness, layerSizes, layers=None ):
        self.length = length
        self.witness = witness
        self.layerSizes = layerSizes
        self.layers = layers or []  # position tuples of each layer, in sorted order

    def __repr__( self ):
        return 'LcsResult(length=%d, witness=%r, layerSizes=%s)' % (
            self.length, self.witness, self.layerSizes )


def strictlyDominatesVec( a, b, counter ):
    '''true iff a exceeds b in every coordinate; a tie would reuse a string position'''
    if len( a ) != len( b ):
        raise dominance.DimensionMismatch( 'cannot compare %d-d with %d-d' % (len( a ), len( b )) )
    nCompared = 0
    for x, y in zip( a, b ):
        nCompared += 1
        if x <= y:
            counter.scalarComparisons += nCompared
            return False
    counter.scalarComparisons += nCompared
    return True

def hakataImaiMinima( points, counter, relation=None ):
    '''minima by marking: a point found above an unmarked pivot is marked and never
    used as a pivot or compared again'''
    relation = relation or dominance.dominatesVec
    n = len( points )
    marked = [False] * n
    minima = []
    for i in range( n ):
        if marked[i]:
            continue
        qi = points[i].coords
        for j in range( n ):
            if j == i or marked[j]:
                continue
            qj = points[j].coords
            # q_i below q_j
            if relation( qj, qi, counter ):
                marked[j] = True
            if relation( qi, qj, counter ):
                marked[i] = True
        if not marked[i]:
            minima.append( points[i] )
    return minima

def layerMinima( matches, engine, counter ):
    '''strict minima of a list of MatchPoints with either engine'''
    points = [dominance.Point( m.positions, i ) for i, m in enumerate( matches )]
    if engine is MlcsEngine.HakataImai:
        found = hakataImaiMinima( points, counter, strictlyDominatesVec )
    else:
        flipped = [dominance.negated( p ) for p in points]
        found = maximaAlgos.twoPhaseMaxima( flipped, None, counter, strictlyDominatesVec )
    return [matches[p.index] for p in found]

def mlcs( strings, engine, counter ):
    engine = MlcsEngine( engine )
    strings = list( strings )
    if len( strings ) < 2:
        raise dominance.ContractViolation( 'mlcs needs at least 2 strings, got %d' % len( strings ) )
    if not all( strings ):
        return LcsResult( 0, '', [] )
    table = SuccessorTable( strings )
    alphabet = sorted( set.intersection( *[set( s ) for s in strings] ) )
    # colexicographic: the last string's position is compared first
    colexKey = lambda m: m.positions[::-1]
    layer = [MatchPoint( (0,) * len( strings ), None )]
    layerSizes = []
    layers = []
    while True:
        candidates = {}
        # layer is in colex order, so the first generator of a candidate is its colex-smallest parent
        for m in layer:
            for c in alphabet:
                positions = table.successor( m.positions, c )
                if positions is not None and positions not in candidates:
                    parent = m if m.symbol is not None else None
                    candidates[positions] = MatchPoint( positions, c, parent )
        if not candidates:
            break
        matches = sorted( candidates.values(), key=colexKey )
        layer = sorted( layerMinima( matches, engine, counter ), key=colexKey )
        layerSizes.append( len( layer ) )
        layers.append( sorted( m.positions for m in layer ) )
    if not layerSizes:
        return LcsResult( 0, '', [] )
    symbols = []
    m = layer[0]
    while m is not None:
        symbols.append( m.symbol )
        m = m.parent
    witness = ''.join( reversed( symbols ) )
    logger.debug( 'mlcs of %d strings: length %d, layer sizes %s', len( strings ), len( witness ), layerSizes )
    return LcsResult( len( layerSizes ), witness, layerSizes, layers )
