#!/usr/bin/env python3
"""
reads point files (one point per line, tab- or space-separated) and sequence files
"""
# standard library modules
import logging
import math

# kdmaxima modules
from . import dominance

logger = logging.getLogger(__name__)


class InputFormatError(ValueError):
    '''a malformed input line; lineNum is 1-based'''
    def __init__( self, msg, lineNum=None, filePath=None ):
        self.lineNum = lineNum
        self.filePath = filePath
        where = filePath or '<input>'
        if lineNum is not None:
            where = '%s line %d' % (where, lineNum)
        super().__init__( '%s: %s' % (where, msg) )


def decodeLines( rawLines, filePath=None ):
    '''decodes utf-8 byte lines one at a time so a bad byte is reported with its line'''
    for lineNum, raw in enumerate( rawLines, 1 ):
        try:
            yield raw.decode( 'utf8' )
        except UnicodeDecodeError as exc:
            raise InputFormatError( 'not valid utf-8 (%s at byte %d)' % (exc.reason, exc.start),
                lineNum, filePath )

def parsePointLines( lines, filePath=None ):
    '''parses lines of numeric fields into Points; dimensionality comes from the first data line'''
    points = []
    dim = None
    for lineNum, line in enumerate( lines, 1 ):
        fields = line.split()
        if not fields:
            continue
        if dim is None:
            dim = len( fields )
        elif len( fields ) != dim:
            raise InputFormatError( 'expected %d fields, found %d' % (dim, len( fields )),
                lineNum, filePath )
        try:
            coords = [float( field ) for field in fields]
        except ValueError as exc:
            raise InputFormatError( 'non-numeric field (%s)' % exc, lineNum, filePath )
        if not all( math.isfinite( x ) for x in coords ):
            raise InputFormatError( 'non-finite field', lineNum, filePath )
        points.append( dominance.makePoint( coords, len( points ) ) )
    return points

def ingestTsv( filePath ):
    '''reads a point file; missing files raise FileNotFoundError'''
    with open( filePath, 'rb' ) as inFile:
        points = parsePointLines( decodeLines( inFile, filePath ), filePath )
    logger.debug( 'read %d points from %s', len( points ), filePath )
    return points

def parseSequenceLines( lines, filePath=None ):
    '''one string per non-blank line; surrounding whitespace is dropped, inner whitespace rejected'''
    strings = []
    for lineNum, line in enumerate( lines, 1 ):
        text = line.strip()
        if not text:
            continue
        if len( text.split() ) > 1:
            raise InputFormatError( 'whitespace inside a sequence', lineNum, filePath )
        strings.append( text )
    return strings

def ingestSequences( filePath ):
    with open( filePath, 'rb' ) as inFile:
        strings = parseSequenceLines( decodeLines( inFile, filePath ), filePath )
    logger.debug( 'read %d sequences from %s', len( strings ), filePath )
    return strings

def formatCoord( x ):
    '''integral values print without a fractional part'''
    return '%d' % x if float( x ).is_integer() else repr( float( x ) )

def formatPoint( point, sep='\t' ):
    return sep.join( formatCoord( x ) for x in point.coords )
