#!/usr/bin/env python3
'''pytest-compatible tests for the maxima algorithms'''
import itertools
# third-party modules
import numpy as np
import pytest
# kdmaxima modules
from kdmaxima import benchRunner
from kdmaxima import dominance
from kdmaxima import maximaAlgos
from kdmaxima.maximaAlgos import AtFraction, AtPower, MaximaConfig


configs = [
    MaximaConfig(),
    MaximaConfig( useSieve=True ),
    MaximaConfig( pruneTrigger=AtFraction( 10 ) ),
    MaximaConfig( useSieve=True, pruneTrigger=AtFraction( 10 ) ),
    MaximaConfig( useSieve=True, pruneTrigger=AtPower( 2/3 ) ),
]

def indexSet( points ):
    return frozenset( p.index for p in points )

def check_allAgree( points ):
    '''every algorithm and configuration finds the brute-force maxima'''
    expected = indexSet( dominance.naiveMaxima( points, dominance.CostCounter() ) )
    for config in configs:
        found = maximaAlgos.twoPhaseMaxima( points, config, dominance.CostCounter() )
        assert indexSet( found ) == expected, '%s disagrees with naive' % config
        assert len( found ) == len( expected ), '%s reported a point twice' % config
    found = maximaAlgos.onlineMaxima( points, dominance.CostCounter() )
    assert indexSet( found ) == expected, 'online disagrees with naive'
    for moveToFront in (False, True):
        found = maximaAlgos.listMaxima( points, moveToFront, dominance.CostCounter() )
        assert indexSet( found ) == expected, 'list (mtf=%s) disagrees with naive' % moveToFront

def check_isRecordList( points, recordList ):
    counter = dominance.CostCounter()
    indices = [p.index for p in recordList]
    assert indices == sorted( indices ), 'records must stay in input order'
    for q in recordList:
        earlier = points[:q.index]
        assert not any( dominance.dominates( e, q, counter ) for e in earlier ), \
            '%s is dominated by an earlier point' % (q.coords,)

def intInstances( rng, nInstances, dims, nMax ):
    for _ in range( nInstances ):
        d = int( rng.choice( list( dims ) ) )
        n = int( rng.integers( 1, nMax+1 ) )
        yield dominance.makePoints( rng.integers( 0, 6, size=(n, d) ).tolist() )

def distInstances( rng, nInstances, dims, nMax ):
    kinds = list( benchRunner.DistributionKind )
    for i in range( nInstances ):
        dist = benchRunner.Distribution( kinds[i % len( kinds )], int( rng.choice( list( dims ) ) ) )
        n = int( rng.integers( 1, nMax+1 ) )
        yield benchRunner.pointsFromArray( benchRunner.sampleCoords( dist, n, rng ) )


def test_eightPoint( planePoints ):
    for config in configs:
        maxima = maximaAlgos.twoPhaseMaxima( planePoints, config, dominance.CostCounter() )
        assert sorted( p.coords for p in maxima ) == [(3,9), (5,8), (8,6), (9,2)], \
            'wrong maxima with %s' % config
    check_allAgree( planePoints )

def test_eightPointRecords( planePoints ):
    recordList = maximaAlgos.records( planePoints, dominance.CostCounter() )
    assert [p.index for p in recordList] == [0, 1, 2, 3, 4, 6, 7], 'records %s' % [p.coords for p in recordList]
    check_isRecordList( planePoints, recordList )

def test_emptyAndSingle():
    for runner in maximaAlgos.algorithmRunners().values():
        maxima, _ = runner( [], dominance.CostCounter() )
        assert list( maxima ) == [], 'empty input has no maxima'
    single = dominance.makePoints( [(1,2,3)] )
    check_allAgree( single )

def test_chainAndAntichain():
    chain = dominance.makePoints( [(i, 2*i, 3*i) for i in range( 50 )] )
    check_allAgree( chain )
    assert indexSet( maximaAlgos.twoPhaseMaxima( chain, None, dominance.CostCounter() ) ) == {49}
    antichain = dominance.makePoints( [(i, 50-i) for i in range( 50 )] )
    check_allAgree( antichain )
    assert len( maximaAlgos.twoPhaseMaxima( antichain, None, dominance.CostCounter() ) ) == 50

def test_duplicatesAreAllMaxima():
    points = dominance.makePoints( [(2,2)] * 5 + [(1,1)] * 3 )
    check_allAgree( points )
    assert indexSet( maximaAlgos.twoPhaseMaxima( points, None, dominance.CostCounter() ) ) == set( range( 5 ) )

def test_oracleEquivalenceQuick():
    rng = np.random.default_rng( 1 )
    for points in intInstances( rng, 150, range( 1, 7 ), 60 ):
        check_allAgree( points )
    for points in distInstances( rng, 60, range( 2, 7 ), 200 ):
        check_allAgree( points )

@pytest.mark.slow
def test_oracleEquivalence():
    rng = np.random.default_rng( 2 )
    for d in range( 2, 7 ):
        for points in distInstances( rng, 1000, [d], 200 ):
            check_allAgree( points )

def test_twoPhaseIdentityExhaustive():
    '''records of the reversed records are the maxima, for every small multiset on a 3x3 grid'''
    grid = list( itertools.product( range( 3 ), repeat=2 ) )
    for size in range( 1, 7 ):
        for rows in itertools.combinations_with_replacement( grid, size ):
            for ordering in (rows, rows[::-1]):
                points = dominance.makePoints( ordering )
                counter = dominance.CostCounter()
                phase1 = maximaAlgos.records( points, counter )
                phase2 = maximaAlgos.records( phase1.entries[::-1], counter )
                expected = indexSet( dominance.naiveMaxima( points, counter ) )
                assert indexSet( phase2 ) == expected, 'identity fails for %s' % (ordering,)

def test_recordsAreRecords():
    rng = np.random.default_rng( 3 )
    for points in intInstances( rng, 40, range( 1, 5 ), 80 ):
        for useSieve in (False, True):
            recordList = maximaAlgos.records( points, dominance.CostCounter(), useSieve )
            check_isRecordList( points, recordList )

def test_sieveState():
    counter = dominance.CostCounter()
    p, q, r, s = dominance.makePoints( [(5,5), (1,1), (10,0), (6,6)] )
    sieve = maximaAlgos.SieveState( p )
    assert sieve.screen( q, counter ), 'a dominated arrival is screened out'
    assert not sieve.screen( r, counter ), 'an incomparable arrival passes'
    assert sieve.sieve is p, 'ties in norm keep the incumbent'
    assert not sieve.screen( s, counter )
    assert sieve.sieve is s, 'a larger norm replaces the sieve'

def test_pruneTriggers():
    assert AtFraction( 10 ).triggerIndex( 100 ) == 10
    assert AtFraction( 10 ).triggerIndex( 9 ) == 0
    assert AtPower( 2/3 ).triggerIndex( 1000 ) == 100
    assert AtPower( 0.5 ).triggerIndex( 10**6 ) == 1000
    with pytest.raises( dominance.ContractViolation ):
        AtFraction( 1 )
    with pytest.raises( dominance.ContractViolation ):
        AtPower( 1.5 )

def test_pruneKeepsPrefixMaxima():
    points = dominance.makePoints( [(1,1), (2,0), (2,2), (0,3), (3,3), (0,0), (4,0), (0,5), (1,1), (2,2)] )
    counter = dominance.CostCounter()
    # n=10, lam=2: prune after the 5th point
    pruned = maximaAlgos.records( points, counter, pruneTrigger=AtFraction( 2 ) )
    plain = maximaAlgos.records( points, counter )
    prefixMaxima = indexSet( dominance.naiveMaxima( points[:5], counter ) )
    assert [p.index for p in plain] == [0, 1, 2, 3, 4, 6, 7]
    assert indexSet( [p for p in pruned if p.index < 5] ) == prefixMaxima, 'pruning keeps the prefix maxima'
    assert [p.index for p in pruned] == sorted( p.index for p in pruned ), 'pruned records stay in input order'

def test_pruneNeverFiresEarly():
    points = dominance.makePoints( [(1,1), (2,2), (0,3)] )
    counter = dominance.CostCounter()
    recordList = maximaAlgos.records( points, counter, pruneTrigger=AtFraction( 3 ) )
    assert [p.index for p in recordList] == [0, 1, 2], 'a trigger index below 2 never fires'

def test_twoPhaseRunRecordCount():
    rng = np.random.default_rng( 4 )
    for points in distInstances( rng, 30, [3], 300 ):
        maxima, phase1 = maximaAlgos.twoPhaseRun( points, MaximaConfig(), dominance.CostCounter() )
        assert phase1.k >= len( maxima ), 'there are at least as many records as maxima'

def test_onlinePrefixMaxima():
    rng = np.random.default_rng( 5 )
    for points in intInstances( rng, 30, range( 1, 5 ), 50 ):
        seen = []
        def callback( i, live ):
            expected = indexSet( dominance.naiveMaxima( points[:i], dominance.CostCounter() ) )
            assert set( live ) == expected, 'live set after %d points is not the prefix maxima' % i
            seen.append( i )
        maximaAlgos.onlineMaxima( points, dominance.CostCounter(), callback )
        assert seen == list( range( 1, len( points )+1 ) ), 'callback once per point'

def test_tracers( planePoints ):
    events = []
    maximaAlgos.listMaxima( planePoints, False, dominance.CostCounter(),
        tracer=lambda event, p: events.append( (event, p.index) ) )
    assert ('delete', 0) in events and ('insert', 1) in events, 'list tracer events %s' % events
    events = []
    maximaAlgos.onlineMaxima( planePoints, dominance.CostCounter(),
        tracer=lambda event, p: events.append( (event, p.index) ) )
    marks = sorted( index for event, index in events if event == 'mark' )
    assert marks == [0, 2, 4], 'online marks %s' % marks

def test_simplexSurfaceAllMaxima():
    rng = np.random.default_rng( 6 )
    dist = benchRunner.Distribution( 'simplex-surface', 2 )
    points = benchRunner.pointsFromArray( benchRunner.sampleCoords( dist, 300, rng ) )
    check_allAgree( points )
    assert len( maximaAlgos.twoPhaseMaxima( points, None, dominance.CostCounter() ) ) == 300

def test_runners():
    rng = np.random.default_rng( 7 )
    points = benchRunner.pointsFromArray( rng.random( (200, 3) ) )
    runners = maximaAlgos.algorithmRunners()
    assert sorted( runners ) == sorted( maximaAlgos.algorithmIds )
    results = {algo: runner( points, dominance.CostCounter() ) for algo, runner in runners.items()}
    sizes = {algo: len( maxima ) for algo, (maxima, _) in results.items()}
    assert len( set( sizes.values() ) ) == 1, 'runners disagree %s' % sizes
    assert results['naive'][1] is None, 'naive keeps no records'
    assert results['2phase'][1] == results['list'][1] == results['online'][1], \
        'list and online insert exactly the records'

def bruteRecords( points ):
    counter = dominance.CostCounter()
    return {q.index for i, q in enumerate( points )
        if not any( dominance.dominates( e, q, counter ) for e in points[:i] )}

def check_listEvents( points, moveToFront ):
    '''list inserts exactly the records; whatever it deletes is a record but not a maximum'''
    inserted = set()
    deleted = set()
    def tracer( event, p ):
        (inserted if event == 'insert' else deleted).add( p.index )
    maximaAlgos.listMaxima( points, moveToFront, dominance.CostCounter(), tracer )
    records = bruteRecords( points )
    maxima = indexSet( dominance.naiveMaxima( points, dominance.CostCounter() ) )
    assert inserted == records, 'inserted %s, records %s' % (sorted( inserted ), sorted( records ))
    assert deleted <= records - maxima, 'deleted %s outside records minus maxima' % sorted( deleted - (records - maxima) )
    assert deleted == records - maxima, 'every non-maximal record is eventually deleted'

def test_listDeletesOnlyRecords():
    rng = np.random.default_rng( 8 )
    for points in intInstances( rng, 60, range( 1, 5 ), 60 ):
        for moveToFront in (False, True):
            check_listEvents( points, moveToFront )
    for points in distInstances( rng, 30, [2, 3], 150 ):
        check_listEvents( points, False )

def test_permutationInvariance():
    rng = np.random.default_rng( 9 )
    for points in distInstances( rng, 30, range( 2, 5 ), 150 ):
        expected = indexSet( dominance.naiveMaxima( points, dominance.CostCounter() ) )
        for _ in range( 3 ):
            shuffled = [points[i] for i in rng.permutation( len( points ) )]
            for config in configs:
                found = maximaAlgos.twoPhaseMaxima( shuffled, config, dominance.CostCounter() )
                assert indexSet( found ) == expected, '%s depends on input order' % config
            assert indexSet( maximaAlgos.onlineMaxima( shuffled, dominance.CostCounter() ) ) == expected, \
                'online depends on input order'
            assert indexSet( maximaAlgos.listMaxima( shuffled, True, dominance.CostCounter() ) ) == expected, \
                'list-mtf depends on input order'
