#!/usr/bin/env python3
"""
command-line interface for maxima, maximal layers, mlcs, benchmarks, and expected values
"""
# standard library modules
import argparse
import logging
import os
import sys

# kdmaxima modules
from kdmaxima import analytics
from kdmaxima import benchRunner
from kdmaxima import dominance
from kdmaxima import layers
from kdmaxima import maximaAlgos
from kdmaxima import mlcs
from kdmaxima import pointsFile

__version__ = '1.0.0'
logger = logging.getLogger(__name__)

# exit statuses
rcOk = 0
rcUsage = 1
rcInput = 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    '''reports argument errors as UsageError instead of exiting with status 2'''
    def error( self, message ):
        self.print_usage( sys.stderr )
        raise UsageError( message )


def envInt( name, default ):
    value = os.getenv( name )
    if value is None or value == '':
        return default
    try:
        return int( value )
    except ValueError:
        raise UsageError( 'environment variable %s is not an integer (%r)' % (name, value) )

def pruneTriggerFromArgs( args ):
    try:
        if args.pruneDelta is not None:
            return maximaAlgos.AtPower( args.pruneDelta )
        return maximaAlgos.AtFraction( args.pruneLambda )
    except dominance.ContractViolation as exc:
        raise UsageError( str( exc ) )

def requireInput( args ):
    if not args.input:
        raise UsageError( 'the %s subcommand needs --input' % args.subcommand )


def doCmdMaxima( args, outFile ):
    requireInput( args )
    points = pointsFile.ingestTsv( args.input )
    runner = maximaAlgos.algorithmRunners( pruneTriggerFromArgs( args ) )[args.algo]
    counter = dominance.CostCounter()
    maxima, nRecords = runner( points, counter )
    for p in maxima:
        print( pointsFile.formatPoint( p ), file=outFile )
    logger.info( '%s: %d maxima of %d points, %d scalar comparisons, %d Dominated calls, records %s',
        args.algo, len( maxima ), len( points ), counter.scalarComparisons, counter.dominatedCalls,
        nRecords )
    return rcOk

def doCmdLayers( args, outFile ):
    requireInput( args )
    points = pointsFile.ingestTsv( args.input )
    counter = dominance.CostCounter()
    partition = layers.layerMethods[args.method]( points, counter )
    for k, layer in enumerate( partition, 1 ):
        for index in sorted( layer ):
            print( '%d\t%s' % (k, pointsFile.formatPoint( points[index] )), file=outFile )
    logger.info( '%s: %d layers of %d points, %d scalar comparisons',
        args.method, partition.K, len( points ), counter.scalarComparisons )
    return rcOk

def doCmdMlcs( args, outFile ):
    requireInput( args )
    strings = pointsFile.ingestSequences( args.input )
    counter = dominance.CostCounter()
    result = mlcs.mlcs( strings, args.engine, counter )
    print( '%d\t%s' % (result.length, result.witness), file=outFile )
    print( 'layer_sizes\t%s' % ' '.join( str( size ) for size in result.layerSizes ), file=outFile )
    logger.info( '%s: lcs length %d over %d strings, %d scalar comparisons',
        args.engine, result.length, len( strings ), counter.scalarComparisons )
    return rcOk

def doCmdExpect( args, outFile ):
    if not args.model or args.dim is None or args.n is None:
        raise UsageError( 'expect needs --model, --dim, and --n' )
    try:
        query = analytics.ExpectationQuery( args.model, args.n, args.dim )
        value = query.evaluate()
    except (ValueError, analytics.CancellationError) as exc:
        raise UsageError( str( exc ) )
    print( '%.6f\t%s' % (value, query.model.value), file=outFile )
    return rcOk

def doCmdBench( args, outFile ):
    if args.seed is None:
        args.seed = envInt( 'KDMAXIMA_SEED', 1 )
    if args.nWorkers is None:
        args.nWorkers = envInt( 'KDMAXIMA_WORKERS', 1 )
    if args.dim is None:
        args.dim = 2
    if args.n is None:
        args.n = 1000
    logger.info( 'bench task %s, seed %d, %d workers requested', args.task, args.seed, args.nWorkers )
    pruneTrigger = pruneTriggerFromArgs( args ) if args.task == 'maxima' else None
    try:
        benchPlan = benchRunner.benchPlanFromArgs( args, pruneTrigger )
    except ValueError as exc:
        raise UsageError( str( exc ) )
    # every setting is checked before any output file is created
    if args.outFile:
        with open( args.outFile, 'w', encoding='utf8', newline='' ) as csvFile:
            return benchRunner.runBench( args, benchPlan, csvFile )
    return benchRunner.runBench( args, benchPlan, outFile )


def createArgumentParser():
    ap = ArgumentParser( description=__doc__, fromfile_prefix_chars='@',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter )
    ap.add_argument( 'subcommand', help='the operation to perform',
        choices=['maxima', 'layers', 'mlcs', 'bench', 'expect'] )
    ap.add_argument( '--version', action='version', version=__version__ )
    ap.add_argument( '--input', help='points file (maxima, layers) or sequences file (mlcs)' )
    ap.add_argument( '--algo', default='2phase', choices=maximaAlgos.algorithmIds,
        help='maxima algorithm' )
    ap.add_argument( '--method', default='peel-maxima', choices=list( layers.layerMethods ),
        help='maximal-layers method' )
    ap.add_argument( '--engine', default='maxima', choices=[e.value for e in mlcs.MlcsEngine],
        help='mlcs minima engine' )
    ap.add_argument( '--model', choices=[m.value for m in analytics.ExpectationModel],
        help='the expectation to compute' )
    ap.add_argument( '--dim', type=int, help='dimensionality (required for expect; bench default 2)' )
    ap.add_argument( '--n', type=int, help='number of points (required for expect; bench default 1000)' )
    ap.add_argument( '--pruneLambda', type=int, default=10, help='prune once at n/pruneLambda records' )
    ap.add_argument( '--pruneDelta', type=float, help='if given, prune once at n**pruneDelta instead' )
    ap.add_argument( '--task', default='maxima', choices=['maxima', 'layers', 'mlcs'],
        help='what the bench subcommand measures' )
    ap.add_argument( '--dist', default='hypercube', choices=[k.value for k in benchRunner.DistributionKind],
        help='sample distribution for bench' )
    ap.add_argument( '--algos', nargs='+', default=maximaAlgos.algorithmIds,
        help='algorithms to bench' )
    ap.add_argument( '--methods', nargs='+', default=list( layers.layerMethods ),
        help='layer methods to bench' )
    ap.add_argument( '--engines', nargs='+', default=[e.value for e in mlcs.MlcsEngine],
        help='mlcs engines to bench' )
    ap.add_argument( '--trials', type=int, default=10, help='number of trials to average' )
    ap.add_argument( '--seed', type=int, help='random seed (default from KDMAXIMA_SEED, else 1)' )
    ap.add_argument( '--nWorkers', type=int,
        help='worker processes, 0 for one per physical core (default from KDMAXIMA_WORKERS, else 1)' )
    ap.add_argument( '--nStrings', type=int, default=2, help='number of random strings for mlcs bench' )
    ap.add_argument( '--length', type=int, default=100, help='length of random strings for mlcs bench' )
    ap.add_argument( '--alphabetSize', type=int, default=4, help='alphabet size (4 for dna, 20 for protein)' )
    ap.add_argument( '--outFile', help='csv output file for bench (default stdout)' )
    ap.add_argument( '--outDataDir', help='directory for the bench results jlog (none if omitted)' )
    return ap

def cliDispatch( argv, outFile=None ):
    '''runs one subcommand; returns 0 on success, 1 for usage errors, 2 for input errors'''
    outFile = outFile or sys.stdout
    handlers = {
        'maxima': doCmdMaxima,
        'layers': doCmdLayers,
        'mlcs': doCmdMlcs,
        'bench': doCmdBench,
        'expect': doCmdExpect,
    }
    try:
        args = createArgumentParser().parse_args( argv )
        return handlers[args.subcommand]( args, outFile )
    except (UsageError, benchRunner.UnknownAlgorithmError) as exc:
        logger.error( 'usage error (%s) %s', type(exc), exc )
        return rcUsage
    except (FileNotFoundError, IsADirectoryError, pointsFile.InputFormatError,
            dominance.ContractViolation) as exc:
        logger.error( 'input error (%s) %s', type(exc), exc )
        return rcInput


if __name__ == "__main__":
    # configure logger formatting
    logFmt = '%(asctime)s %(levelname)s %(module)s %(funcName)s %(message)s'
    logDateFmt = '%Y/%m/%d %H:%M:%S'
    logging.basicConfig(format=logFmt, datefmt=logDateFmt)
    logging.captureWarnings(True)
    logger.setLevel(logging.INFO)
    logging.getLogger('kdmaxima').setLevel(logging.INFO)
    logger.debug('the logger is configured')

    rc = cliDispatch( sys.argv[1:] )
    sys.exit( rc )
