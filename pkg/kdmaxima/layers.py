#!/usr/bin/env python3
"""
maximal layers (non-dominated sorting) by repeated peeling, plus Deb's rank-counting method
"""
# standard library modules
import enum
import logging

# kdmaxima modules
from . import dominance
from . import maximaAlgos

logger = logging.getLogger(__name__)


class LayerEngine(enum.Enum):
    Maxima = 'maxima'
    Naive = 'naive'


class LayerPartition(object):
    '''ordered layers L_1..L_K, each a frozenset of input point indices'''
    def __init__( self, layers ):
        self.layers = [frozenset( layer ) for layer in layers]

    @property
    def K( self ):
        return len( self.layers )

    def __len__( self ):
        return len( self.layers )

    def __iter__( self ):
        return iter( self.layers )

    def __eq__( self, other ):
        return isinstance( other, LayerPartition ) and self.layers == other.layers

    def __repr__( self ):
        return 'LayerPartition(K=%d, sizes=%s)' % (self.K, [len( layer ) for layer in self.layers])

    def layerOf( self ):
        '''maps each point index to its 1-based layer number'''
        return {index: k for k, layer in enumerate( self.layers, 1 ) for index in layer}


class DebState(object):
    '''rank[i] counts the points dominating point i; dominatedSets[i] lists the points i dominates
    (both by position in the input sequence)'''
    def __init__( self, n ):
        self.rank = [0] * n
        self.dominatedSets = [[] for _ in range( n )]


def peelLayers( points, engine, counter ):
    '''takes the maxima of the remainder until nothing is left'''
    engine = LayerEngine( engine )
    remainder = list( points )
    layers = []
    while remainder:
        if engine is LayerEngine.Maxima:
            found = maximaAlgos.twoPhaseMaxima( remainder, None, counter )
        else:
            found = dominance.naiveMaxima( remainder, counter )
        layer = frozenset( p.index for p in found )
        layers.append( layer )
        remainder = [p for p in remainder if p.index not in layer]
        if engine is LayerEngine.Maxima:
            remainder.reverse()
    logger.debug( 'peeled %d layers from %d points', len( layers ), len( points ) )
    return LayerPartition( layers )

def debState( points, counter ):
    '''compares every unordered pair once, filling ranks and dominated sets'''
    n = len( points )
    state = DebState( n )
    rank = state.rank
    dominatedSets = state.dominatedSets
    compare = dominance.compare
    FirstDominates = dominance.DominanceOutcome.FirstDominates
    SecondDominates = dominance.DominanceOutcome.SecondDominates
    for i in range( n ):
        p = points[i]
        for j in range( i + 1, n ):
            outcome = compare( p, points[j], counter )
            if outcome is FirstDominates:
                dominatedSets[i].append( j )
                rank[j] += 1
            elif outcome is SecondDominates:
                dominatedSets[j].append( i )
                rank[i] += 1
    return state

def debLayers( points, counter ):
    state = debState( points, counter )
    rank = list( state.rank )
    front = [i for i in range( len( points ) ) if rank[i] == 0]
    layers = []
    while front:
        layers.append( frozenset( points[i].index for i in front ) )
        nextFront = []
        for i in front:
            for j in state.dominatedSets[i]:
                rank[j] -= 1
                if rank[j] == 0:
                    nextFront.append( j )
        front = nextFront
    return LayerPartition( layers )

layerMethods = {
    'peel-maxima': lambda points, counter: peelLayers( points, LayerEngine.Maxima, counter ),
    'peel-naive': lambda points, counter: peelLayers( points, LayerEngine.Naive, counter ),
    'deb': debLayers,
}
