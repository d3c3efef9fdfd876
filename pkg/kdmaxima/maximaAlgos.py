#!/usr/bin/env python3
"""
maxima-finding algorithms: record reduction, the two-phase k-d tree algorithm with sieve and
prune, the on-line variant, and the list-based sequential baseline
"""
# standard library modules
import logging
import math

# kdmaxima modules
from . import dominance
from . import kdTree

logger = logging.getLogger(__name__)


class RecordList(object):
    '''non-dominated records q_1..q_k, kept in input order'''
    def __init__( self, entries=None ):
        self.entries = list( entries ) if entries else []

    @property
    def k( self ):
        return len( self.entries )

    def __len__( self ):
        return len( self.entries )

    def __iter__( self ):
        return iter( self.entries )

    def __repr__( self ):
        return 'RecordList(k=%d)' % self.k


def l1Norm( coords ):
    return sum( map( abs, coords ) )


class SieveState(object):
    '''the retained point of largest L1 norm; arrivals it dominates are dropped early'''
    def __init__( self, sieve, relation=None ):
        self.sieve = sieve
        self.norm = l1Norm( sieve.coords )
        self.relation = relation or dominance.dominatesVec

    def screen( self, p, counter ):
        '''returns True if p is dominated by the sieve; otherwise may adopt p as the new sieve'''
        if self.relation( self.sieve.coords, p.coords, counter ):
            return True
        norm = l1Norm( p.coords )
        counter.scalarComparisons += 1
        # ties keep the incumbent
        if norm > self.norm:
            self.sieve = p
            self.norm = norm
        return False


class AtFraction(object):
    '''prune when the Phase-1 index reaches floor(n/lam)'''
    def __init__( self, lam ):
        if not isinstance( lam, int ) or lam <= 1:
            raise dominance.ContractViolation( 'prune fraction lam must be an integer > 1, got %s' % (lam,) )
        self.lam = lam

    def __repr__( self ):
        return 'AtFraction(%d)' % self.lam

    def triggerIndex( self, n ):
        return n // self.lam

class AtPower(object):
    '''prune when the Phase-1 index reaches floor(n**delta)'''
    def __init__( self, delta ):
        if not 0 < delta < 1:
            raise dominance.ContractViolation( 'prune power delta must lie in (0,1), got %s' % (delta,) )
        self.delta = delta

    def __repr__( self ):
        return 'AtPower(%g)' % self.delta

    def triggerIndex( self, n ):
        return int( math.floor( n ** self.delta + 1e-9 ) )


class MaximaConfig(object):
    def __init__( self, useSieve=False, pruneTrigger=None ):
        self.useSieve = useSieve
        self.pruneTrigger = pruneTrigger

    def __repr__( self ):
        return 'MaximaConfig(useSieve=%s, pruneTrigger=%s)' % (self.useSieve, self.pruneTrigger)


def records( points, counter, useSieve=False, pruneTrigger=None, relation=None ):
    '''returns the points not dominated by any earlier point, in input order'''
    if not points:
        return RecordList()
    first = points[0]
    tree = kdTree.KdTree( len( first.coords ), kdTree.TreeMode.UpperOnly, relation )
    kdTree.insert( tree, first, counter )
    recordList = RecordList( [first] )
    sieve = SieveState( first, relation ) if useSieve else None
    pruneAt = pruneTrigger.triggerIndex( len( points ) ) if pruneTrigger else 0
    isDominated = kdTree.isDominated
    insert = kdTree.insert
    for i in range( 1, len( points ) ):
        p = points[i]
        if sieve is not None and sieve.screen( p, counter ):
            pass
        elif not isDominated( tree, p, counter ):
            insert( tree, p, counter )
            recordList.entries.append( p )
        if i + 1 == pruneAt:
            tree, recordList = prune( tree, recordList, counter )
            logger.debug( 'pruned at i=%d, %d records kept', pruneAt, recordList.k )
    return recordList

def prune( tree, recordList, counter ):
    '''rebuilds the record tree from the records scanned in reverse, keeping only those not
    dominated; the survivors are the maxima of the prefix seen so far'''
    newTree = kdTree.KdTree( tree.dim, tree.mode, tree.relation )
    survivors = []
    for q in reversed( recordList.entries ):
        if newTree.root is None or not kdTree.isDominated( newTree, q, counter ):
            kdTree.insert( newTree, q, counter )
            survivors.append( q )
    # survival order is reverse input order; restore input order for Phase 2
    survivors.reverse()
    return newTree, RecordList( survivors )

def twoPhaseRun( points, config, counter, relation=None ):
    '''returns (maxima in reverse-record order, the Phase-1 RecordList)'''
    config = config or MaximaConfig()
    phase1 = records( points, counter, config.useSieve, config.pruneTrigger, relation )
    # Phase 2 gets a fresh tree and no sieve
    phase2 = records( phase1.entries[::-1], counter, relation=relation )
    return phase2.entries, phase1

def twoPhaseMaxima( points, config, counter, relation=None ):
    maxima, _ = twoPhaseRun( points, config, counter, relation )
    return maxima

def onlineMaxima( points, counter, callback=None, tracer=None ):
    '''keeps the maxima of every prefix; callback(i, live) sees the live dict after i points'''
    live = {}  # point index -> Point, in insertion order
    if not points:
        return []
    tree = kdTree.KdTree( len( points[0].coords ), kdTree.TreeMode.UpperAndLower )
    onMark = None
    if tracer:
        onMark = lambda point: tracer( 'mark', point )
    for i, p in enumerate( points ):
        if tree.root is None or not kdTree.isDominated( tree, p, counter ):
            kdTree.deleteDominated( tree, p, live, counter, onMark )
            kdTree.insert( tree, p, counter )
            live[p.index] = p
            if tracer:
                tracer( 'insert', p )
        if callback:
            callback( i + 1, live )
    return list( live.values() )

def listMaxima( points, moveToFront, counter, tracer=None ):
    '''sequential maxima over a list: dominated arrivals are dropped, dominated entries removed'''
    maxima = []
    compare = dominance.compare
    FirstDominates = dominance.DominanceOutcome.FirstDominates
    SecondDominates = dominance.DominanceOutcome.SecondDominates
    for p in points:
        dominatorPos = None
        survivors = []
        deleted = []
        for pos, q in enumerate( maxima ):
            outcome = compare( q, p, counter )
            if outcome is FirstDominates:
                dominatorPos = pos
                break
            elif outcome is SecondDominates:
                deleted.append( q )
            else:
                survivors.append( q )
        if dominatorPos is not None:
            # the list is an antichain, so nothing was deleted before a dominator turned up
            if moveToFront and dominatorPos:
                maxima.insert( 0, maxima.pop( dominatorPos ) )
            continue
        survivors.append( p )
        maxima = survivors
        if tracer:
            for q in deleted:
                tracer( 'delete', q )
            tracer( 'insert', p )
    return maxima


def _runTwoPhase( useSieve, pruneTrigger ):
    def runner( points, counter ):
        maxima, phase1 = twoPhaseRun( points, MaximaConfig( useSieve, pruneTrigger ), counter )
        return maxima, phase1.k
    return runner

def _runInsertCounting( algorithm ):
    def runner( points, counter ):
        inserted = []
        def tracer( event, point ):
            if event == 'insert':
                inserted.append( point.index )
        return algorithm( points, counter, tracer ), len( inserted )
    return runner

def algorithmRunners( pruneTrigger=None ):
    '''maps algorithm ids to runner(points, counter) -> (maxima, nRecords or None)'''
    pruneTrigger = pruneTrigger or AtFraction( 10 )
    return {
        'naive': lambda points, counter: (dominance.naiveMaxima( points, counter ), None),
        'list': _runInsertCounting( lambda pts, ctr, tr: listMaxima( pts, False, ctr, tr ) ),
        'list-mtf': _runInsertCounting( lambda pts, ctr, tr: listMaxima( pts, True, ctr, tr ) ),
        '2phase': _runTwoPhase( False, None ),
        '2phase-prune': _runTwoPhase( False, pruneTrigger ),
        '2phase-sieve': _runTwoPhase( True, None ),
        '2phase-prune-sieve': _runTwoPhase( True, pruneTrigger ),
        'online': _runInsertCounting( lambda pts, ctr, tr: onlineMaxima( pts, ctr, tracer=tr ) ),
    }

algorithmIds = ['naive', 'list', 'list-mtf', '2phase', '2phase-prune', '2phase-sieve',
    '2phase-prune-sieve', 'online']
