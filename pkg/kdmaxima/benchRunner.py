#!/usr/bin/env python3
"""
runs seeded benchmark trials of maxima, layer, and mlcs algorithms and reports averaged counters
"""
# standard library modules
import collections
from concurrent import futures
import csv
import datetime
import enum
import json
import logging
import os
import signal
import time

# third-party modules
import numpy as np
import psutil

# kdmaxima modules
from . import dominance
from . import layers
from . import maximaAlgos
from . import mlcs

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


# possible place for globals is this class's attributes
class g_:
    signaled = False
    resultsLogFile = None


def sigtermHandler( sig, frame ):
    g_.signaled = True
    logger.warning( 'SIGTERM received; will stop after the current trials' )

def sigtermSignaled():
    return g_.signaled

def sigtermNotSignaled():
    return not sigtermSignaled()

def logOperation( op, value ):
    if g_.resultsLogFile:
        toLog = {
            'dateTime': datetime.datetime.now(datetime.timezone.utc).isoformat(),
            'type': 'operation',
            'args': {op: value}
            }
        print( json.dumps( toLog, sort_keys=True ), file=g_.resultsLogFile )
        g_.resultsLogFile.flush()

def logTrialState( trialIndex, state, counters=None ):
    if g_.resultsLogFile:
        args = {'trialIndex': trialIndex, 'state': state}
        if counters is not None:
            args['counters'] = counters
        toLog = {
            'dateTime': datetime.datetime.now(datetime.timezone.utc).isoformat(),
            'type': 'trialState',
            'args': args
        }
        print( json.dumps( toLog, sort_keys=True ), file=g_.resultsLogFile )
        g_.resultsLogFile.flush()


class UnknownAlgorithmError(ValueError):
    pass


class DistributionKind(enum.Enum):
    Hypercube = 'hypercube'
    SimplexSolid = 'simplex-solid'
    SimplexSurface = 'simplex-surface'


class Distribution(object):
    def __init__( self, kind, d ):
        self.kind = DistributionKind( kind )
        if d < 1:
            raise dominance.ContractViolation( 'dimension must be >= 1, got %d' % d )
        self.d = d

    @property
    def name( self ):
        return self.kind.value

    def __repr__( self ):
        return 'Distribution(%s, d=%d)' % (self.kind.value, self.d)


def resolveWorkers( nWorkers ):
    '''0 means one worker per physical core'''
    if nWorkers is None:
        return 1
    if nWorkers == 0:
        return psutil.cpu_count( logical=False ) or 1
    if nWorkers < 0:
        raise ValueError( 'nWorkers must be >= 0, got %d' % nWorkers )
    return nWorkers

def checkRunSettings( n, trials, nWorkers ):
    '''rejects sizes and worker counts a run cannot use'''
    if n < 1 or trials < 1:
        raise dominance.ContractViolation( 'n and trials must be >= 1 (got %d, %d)' % (n, trials) )
    resolveWorkers( nWorkers )

def trialRng( seed, trialIndex ):
    '''an independent stream per (seed, trial)'''
    return np.random.default_rng( [seed & 0xFFFFFFFFFFFFFFFF, trialIndex] )

def sampleCoords( dist, n, rng ):
    '''an (n, d) array of points uniform in the region'''
    d = dist.d
    if dist.kind is DistributionKind.Hypercube:
        return rng.random( (n, d) )
    elif dist.kind is DistributionKind.SimplexSolid:
        # d+1 normalized exponentials; dropping the last gives the solid simplex
        expo = rng.exponential( size=(n, d+1) )
        return (expo / expo.sum( axis=1, keepdims=True ))[:, :d]
    expo = rng.exponential( size=(n, d) )
    return expo / expo.sum( axis=1, keepdims=True )

def pointsFromArray( arr ):
    return [dominance.Point( tuple( row ), i ) for i, row in enumerate( arr.tolist() )]

def generate( dist, n, seed ):
    if n < 1:
        raise dominance.ContractViolation( 'sample size must be >= 1, got %d' % n )
    rng = np.random.default_rng( seed & 0xFFFFFFFFFFFFFFFF )
    return pointsFromArray( sampleCoords( dist, n, rng ) )


class ExperimentSpec(object):
    def __init__( self, distribution, n, trials, algorithms, seed=1, pruneTrigger=None, nWorkers=1 ):
        self.distribution = distribution
        self.n = n
        self.trials = trials
        self.algorithms = list( algorithms )
        self.seed = seed
        self.pruneTrigger = pruneTrigger
        self.nWorkers = nWorkers
        unknown = [algo for algo in self.algorithms if algo not in maximaAlgos.algorithmIds]
        if unknown:
            raise UnknownAlgorithmError( 'unknown algorithm(s) %s; choose from %s'
                % (unknown, maximaAlgos.algorithmIds) )
        checkRunSettings( n, trials, nWorkers )

    def __repr__( self ):
        return 'ExperimentSpec(%s, n=%d, trials=%d, algorithms=%s, seed=%d, prune=%s)' % (
            self.distribution, self.n, self.trials, self.algorithms, self.seed, self.pruneTrigger )


BenchRecord = collections.namedtuple( 'BenchRecord', ['algorithm', 'distribution', 'd', 'n',
    'trials', 'avg_scalar_comparisons_per_point', 'avg_dominated_calls', 'avg_maxima',
    'avg_records', 'seed'] )


class TrialCollection(object):
    '''per-algorithm arrays of per-trial results, in trial order'''
    def __init__( self, names, fields, rows ):
        self.nTrials = len( rows )
        self.arrays = {}
        for name in names:
            self.arrays[name] = {}
            for field in fields:
                values = [row[name].get( field ) for row in rows]
                values = [np.nan if v is None else v for v in values]
                self.arrays[name][field] = np.array( values, dtype=np.float64 )

    def mean( self, name, field ):
        values = self.arrays[name][field]
        if not len( values ) or np.isnan( values ).all():
            return None
        return float( values.mean() )

    def stdErr( self, name, field ):
        values = self.arrays[name][field]
        if len( values ) < 2:
            return float( 'nan' )
        return float( values.std( ddof=1 ) / np.sqrt( len( values ) ) )


def runTrial( spec, trialIndex ):
    '''runs every algorithm of spec on one shared sample'''
    rng = trialRng( spec.seed, trialIndex )
    points = pointsFromArray( sampleCoords( spec.distribution, spec.n, rng ) )
    runners = maximaAlgos.algorithmRunners( spec.pruneTrigger )
    results = {}
    maximaSets = {}
    for algo in spec.algorithms:
        counter = dominance.CostCounter()
        maxima, nRecords = runners[algo]( points, counter )
        maximaSets[algo] = frozenset( p.index for p in maxima )
        results[algo] = {
            'scalarComparisons': counter.scalarComparisons,
            'dominatedCalls': counter.dominatedCalls,
            'maxima': len( maxima ),
            'records': nRecords,
        }
    if len( set( maximaSets.values() ) ) > 1:
        logger.error( 'trial %d: algorithms disagree on maxima %s', trialIndex,
            {algo: len( s ) for algo, s in maximaSets.items()} )
    return results

def runLayerTrial( spec, trialIndex ):
    rng = trialRng( spec.seed, trialIndex )
    points = pointsFromArray( sampleCoords( spec.distribution, spec.n, rng ) )
    results = {}
    partitions = {}
    for method in spec.methods:
        counter = dominance.CostCounter()
        partition = layers.layerMethods[method]( points, counter )
        partitions[method] = partition.layers
        results[method] = {'scalarComparisons': counter.scalarComparisons, 'layers': partition.K}
    if len( set( tuple( p ) for p in partitions.values() ) ) > 1:
        logger.error( 'trial %d: layer methods disagree', trialIndex )
    return results

def runMlcsTrial( spec, trialIndex ):
    rng = trialRng( spec.seed, trialIndex )
    strings = randomStrings( spec, rng )
    results = {}
    for engine in spec.engines:
        counter = dominance.CostCounter()
        result = mlcs.mlcs( strings, engine, counter )
        results[engine] = {'scalarComparisons': counter.scalarComparisons, 'lcsLength': result.length}
    if len( set( r['lcsLength'] for r in results.values() ) ) > 1:
        logger.error( 'trial %d: mlcs engines disagree %s', trialIndex, results )
    return results

def _runTrialArgs( trialArgs ):
    trialFunc, spec, trialIndex = trialArgs
    return trialFunc( spec, trialIndex )

def _collect( trialFunc, spec ):
    '''runs trials in order, in chunks of nWorkers, until done or SIGTERM'''
    nWorkers = resolveWorkers( spec.nWorkers )
    rows = []
    executor = futures.ProcessPoolExecutor( max_workers=nWorkers ) if nWorkers > 1 else None
    try:
        trialIndex = 0
        while trialIndex < spec.trials and sigtermNotSignaled():
            chunk = range( trialIndex, min( spec.trials, trialIndex + nWorkers ) )
            for index in chunk:
                logTrialState( index, 'started' )
            trialArgs = [(trialFunc, spec, index) for index in chunk]
            if executor:
                chunkRows = list( executor.map( _runTrialArgs, trialArgs ) )
            else:
                chunkRows = [_runTrialArgs( a ) for a in trialArgs]
            for index, row in zip( chunk, chunkRows ):
                logTrialState( index, 'finished', row )
            rows.extend( chunkRows )
            trialIndex = chunk.stop
    finally:
        if executor:
            executor.shutdown()
    if len( rows ) < spec.trials:
        logger.warning( 'interrupted after %d of %d trials', len( rows ), spec.trials )
        logOperation( 'interrupted', {'nTrialsFinished': len( rows )} )
    return rows

def collectTrials( spec ):
    rows = _collect( runTrial, spec )
    return TrialCollection( spec.algorithms, ['scalarComparisons', 'dominatedCalls', 'maxima', 'records'], rows )

def runExperiment( spec ):
    collection = collectTrials( spec )
    if not collection.nTrials:
        return []
    recs = []
    for algo in spec.algorithms:
        recs.append( BenchRecord(
            algorithm=algo,
            distribution=spec.distribution.name,
            d=spec.distribution.d,
            n=spec.n,
            trials=collection.nTrials,
            avg_scalar_comparisons_per_point=collection.mean( algo, 'scalarComparisons' ) / spec.n,
            avg_dominated_calls=collection.mean( algo, 'dominatedCalls' ),
            avg_maxima=collection.mean( algo, 'maxima' ),
            avg_records=collection.mean( algo, 'records' ),
            seed=spec.seed
        ) )
    return recs


class LayerExperimentSpec(object):
    def __init__( self, distribution, n, trials, methods=None, seed=1, nWorkers=1 ):
        self.distribution = distribution
        self.n = n
        self.trials = trials
        self.methods = list( methods or layers.layerMethods )
        self.seed = seed
        self.nWorkers = nWorkers
        unknown = [m for m in self.methods if m not in layers.layerMethods]
        if unknown:
            raise UnknownAlgorithmError( 'unknown layer method(s) %s; choose from %s'
                % (unknown, list( layers.layerMethods )) )
        checkRunSettings( n, trials, nWorkers )

    def __repr__( self ):
        return 'LayerExperimentSpec(%s, n=%d, trials=%d, methods=%s, seed=%d)' % (
            self.distribution, self.n, self.trials, self.methods, self.seed )

LayerBenchRecord = collections.namedtuple( 'LayerBenchRecord', ['algorithm', 'distribution', 'd',
    'n', 'trials', 'avg_scalar_comparisons_per_point', 'avg_layers', 'seed'] )

def runLayerExperiment( spec ):
    rows = _collect( runLayerTrial, spec )
    collection = TrialCollection( spec.methods, ['scalarComparisons', 'layers'], rows )
    if not collection.nTrials:
        return []
    return [LayerBenchRecord( method, spec.distribution.name, spec.distribution.d, spec.n,
        collection.nTrials, collection.mean( method, 'scalarComparisons' ) / spec.n,
        collection.mean( method, 'layers' ), spec.seed ) for method in spec.methods]


dnaAlphabet = 'acgt'
proteinAlphabet = 'ACDEFGHIKLMNPQRSTVWY'

class MlcsExperimentSpec(object):
    def __init__( self, nStrings, length, alphabetSize, trials, engines=None, seed=1, nWorkers=1 ):
        if nStrings < 2 or length < 1:
            raise dominance.ContractViolation( 'need >= 2 strings of length >= 1' )
        if not 1 <= alphabetSize <= len( proteinAlphabet ):
            raise dominance.ContractViolation( 'alphabet size must be 1..%d, got %d'
                % (len( proteinAlphabet ), alphabetSize) )
        self.nStrings = nStrings
        self.length = length
        self.alphabetSize = alphabetSize
        self.trials = trials
        self.engines = list( engines or [e.value for e in mlcs.MlcsEngine] )
        self.seed = seed
        self.nWorkers = nWorkers
        known = [e.value for e in mlcs.MlcsEngine]
        unknown = [e for e in self.engines if e not in known]
        if unknown:
            raise UnknownAlgorithmError( 'unknown mlcs engine(s) %s; choose from %s' % (unknown, known) )
        checkRunSettings( length, trials, nWorkers )

    def __repr__( self ):
        return 'MlcsExperimentSpec(%d strings of length %d over %r, trials=%d, engines=%s, seed=%d)' % (
            self.nStrings, self.length, self.alphabet, self.trials, self.engines, self.seed )

    @property
    def alphabet( self ):
        source = dnaAlphabet if self.alphabetSize <= len( dnaAlphabet ) else proteinAlphabet
        return source[:self.alphabetSize]

def randomStrings( spec, rng ):
    alphabet = spec.alphabet
    codes = rng.integers( 0, len( alphabet ), size=(spec.nStrings, spec.length) )
    return [''.join( alphabet[c] for c in row ) for row in codes.tolist()]

MlcsBenchRecord = collections.namedtuple( 'MlcsBenchRecord', ['engine', 'n_strings', 'length',
    'alphabet_size', 'trials', 'avg_scalar_comparisons', 'avg_lcs_length', 'seed'] )

def runMlcsExperiment( spec ):
    rows = _collect( runMlcsTrial, spec )
    collection = TrialCollection( spec.engines, ['scalarComparisons', 'lcsLength'], rows )
    if not collection.nTrials:
        return []
    return [MlcsBenchRecord( engine, spec.nStrings, spec.length, spec.alphabetSize,
        collection.nTrials, collection.mean( engine, 'scalarComparisons' ),
        collection.mean( engine, 'lcsLength' ), spec.seed ) for engine in spec.engines]


def _formatField( name, value ):
    if value is None:
        return ''
    if isinstance( value, float ):
        if name == 'avg_scalar_comparisons_per_point':
            return '%.2f' % value
        return '%.4f' % value
    return value

def writeBenchCsv( recs, outFile, recordType=BenchRecord ):
    '''writes a header row of the record's field names, then one row per record'''
    fieldNames = list( recordType._fields )
    writer = csv.DictWriter( outFile, fieldnames=fieldNames, lineterminator='\n' )
    writer.writeheader()
    for rec in recs:
        writer.writerow( {name: _formatField( name, value ) for name, value in rec._asdict().items()} )


def benchPlanFromArgs( args, pruneTrigger=None ):
    '''builds (spec, runner, recordType) for the bench task in parsed args; bad settings raise ValueError'''
    if args.task == 'mlcs':
        spec = MlcsExperimentSpec( args.nStrings, args.length, args.alphabetSize, args.trials,
            args.engines, args.seed, args.nWorkers )
        return spec, runMlcsExperiment, MlcsBenchRecord
    elif args.task == 'layers':
        spec = LayerExperimentSpec( Distribution( args.dist, args.dim ), args.n, args.trials,
            args.methods, args.seed, args.nWorkers )
        return spec, runLayerExperiment, LayerBenchRecord
    spec = ExperimentSpec( Distribution( args.dist, args.dim ), args.n, args.trials,
        args.algos, args.seed, pruneTrigger, args.nWorkers )
    return spec, runExperiment, BenchRecord

def runBench( args, benchPlan, outFile ):
    '''runs a plan from benchPlanFromArgs, writing CSV to outFile; returns exit status'''
    spec, runner, recordType = benchPlan
    signal.signal( signal.SIGTERM, sigtermHandler )
    if args.outDataDir:
        os.makedirs( args.outDataDir, exist_ok=True )
        resultsLogFilePath = os.path.join( args.outDataDir,
            os.path.splitext( os.path.basename( __file__ ) )[0] + '_results.jlog' )
        g_.resultsLogFile = open( resultsLogFilePath, 'w', encoding='utf8' )
    try:
        logOperation( 'starting', vars( args ) )
        startTime = time.time()
        logger.info( 'running %s', spec )
        recs = runner( spec )
        writeBenchCsv( recs, outFile, recordType )
        elapsed = time.time() - startTime
        nTrials = recs[0].trials if recs else 0
        logger.info( 'finished %d trials; elapsed time %.1f seconds', nTrials, elapsed )
        logOperation( 'finished', {'nTrials': nTrials, 'elapsed': round( elapsed, 3 )} )
    finally:
        if g_.resultsLogFile:
            g_.resultsLogFile.close()
            g_.resultsLogFile = None
    return 0
