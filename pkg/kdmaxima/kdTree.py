#!/usr/bin/env python3
"""
k-d tree with per-subtree bounding boxes, used for dominance search, marking deletion, and rebuilds
"""
# standard library modules
import enum
import logging

# kdmaxima modules
from . import dominance

logger = logging.getLogger(__name__)


class TreeMode(enum.Enum):
    UpperOnly = 'upper'
    UpperAndLower = 'upperAndLower'


class KdNode(object):
    '''one point of a k-d tree, with the bounding vectors of the subtree it roots'''
    __slots__ = ('point', 'disc', 'left', 'right', 'upper', 'lower', 'marked')

    def __init__( self, point, disc, withLower ):
        self.point = point
        self.disc = disc  # 1-based coordinate number
        self.left = None
        self.right = None
        self.upper = point.coords
        self.lower = point.coords if withLower else None
        self.marked = False

    def __repr__( self ):
        return 'KdNode(%s, disc=%d%s)' % (self.point.coords, self.disc,
            ', marked' if self.marked else '' )


class KdTree(object):
    '''a k-d tree; relation(a, b, counter) says whether vector a dominates vector b'''
    def __init__( self, dim, mode=TreeMode.UpperOnly, relation=None ):
        self.root = None
        self.dim = dim
        self.mode = mode
        self.relation = relation or dominance.dominatesVec
        self.size = 0

    def __len__( self ):
        return self.size

    def nodes( self ):
        '''yields nodes in preorder (node, left subtree, right subtree)'''
        stack = [self.root] if self.root else []
        while stack:
            node = stack.pop()
            yield node
            if node.right is not None:
                stack.append( node.right )
            if node.left is not None:
                stack.append( node.left )

    def points( self, includeMarked=True ):
        return [node.point for node in self.nodes() if includeMarked or not node.marked]


def insert( tree, p, counter ):
    '''places p by the discriminator rule (ties go right), widening bounds along the path'''
    coords = p.coords
    if len( coords ) != tree.dim:
        raise dominance.DimensionMismatch( 'cannot insert %d-d point into %d-d tree'
            % (len( coords ), tree.dim) )
    withLower = tree.mode is TreeMode.UpperAndLower
    tree.size += 1
    node = tree.root
    if node is None:
        tree.root = KdNode( p, 1, withLower )
        return
    d = tree.dim
    nCompared = 0
    while True:
        node.upper = tuple( map( max, node.upper, coords ) )
        if withLower:
            node.lower = tuple( map( min, node.lower, coords ) )
        ell = node.disc - 1
        nCompared += 1
        if coords[ell] >= node.point.coords[ell]:
            if node.right is None:
                node.right = KdNode( p, node.disc % d + 1, withLower )
                break
            node = node.right
        else:
            if node.left is None:
                node.left = KdNode( p, node.disc % d + 1, withLower )
                break
            node = node.left
    counter.scalarComparisons += nCompared

def isDominated( tree, p, counter ):
    '''true iff some node point (marked or not) dominates p; subtrees whose upper bound
    does not dominate p are skipped'''
    root = tree.root
    if root is None:
        return False
    relation = tree.relation
    pc = p.coords
    counter.dominatedCalls += 1
    if relation( root.point.coords, pc, counter ):
        return True
    # a child's bound is checked when it is popped, so the left subtree is finished
    # before the right bound is looked at
    stack = [root.right, root.left]
    while stack:
        node = stack.pop()
        if node is None or not relation( node.upper, pc, counter ):
            continue
        counter.dominatedCalls += 1
        if relation( node.point.coords, pc, counter ):
            return True
        stack.append( node.right )
        stack.append( node.left )
    return False

def deleteDominated( tree, p, liveSet, counter, onMark=None ):
    '''marks every unmarked node dominated by p and pops it from liveSet (a dict keyed by
    point index); returns the number of nodes newly marked'''
    if tree.mode is not TreeMode.UpperAndLower:
        raise dominance.ContractViolation( 'deleteDominated needs lower bounds (UpperAndLower mode)' )
    root = tree.root
    if root is None:
        return 0
    relation = tree.relation
    pc = p.coords
    nMarked = 0
    stack = [root]
    while stack:
        node = stack.pop()
        if node is None:
            continue
        if node is not root and not relation( pc, node.lower, counter ):
            continue
        if relation( pc, node.point.coords, counter ) and not node.marked:
            node.marked = True
            liveSet.pop( node.point.index, None )
            nMarked += 1
            if onMark:
                onMark( node.point )
        stack.append( node.right )
        stack.append( node.left )
    return nMarked

def rebuildFrom( points, counter, dim=None, mode=TreeMode.UpperOnly, relation=None ):
    '''returns a fresh tree holding the given points, inserted in order'''
    if dim is None:
        dim = len( points[0].coords ) if points else 0
    tree = KdTree( dim, mode, relation )
    for point in points:
        insert( tree, point, counter )
    return tree


def checkInvariants( tree ):
    '''recomputes partition and bound invariants bottom-up; returns a list of violations'''
    problems = []
    if tree.root is None:
        if tree.size:
            problems.append( 'empty tree claims size %d' % tree.size )
        return problems
    if tree.root.disc != 1:
        problems.append( 'root discriminator is %d' % tree.root.disc )
    d = tree.dim
    # reversed (node, right, left) preorder visits children before parents
    order = []
    stack = [tree.root]
    while stack:
        node = stack.pop()
        order.append( node )
        for child in (node.left, node.right):
            if child is not None:
                stack.append( child )
                if child.disc != node.disc % d + 1:
                    problems.append( 'child of %s has discriminator %d' % (node, child.disc) )
    subtreePoints = {}
    for node in reversed( order ):
        ell = node.disc - 1
        pivot = node.point.coords[ell]
        members = [node.point]
        for child, isLeft in ((node.left, True), (node.right, False)):
            if child is None:
                continue
            below = subtreePoints.pop( id( child ) )
            for w in below:
                if isLeft and not w.coords[ell] < pivot:
                    problems.append( '%s is left of %s but not smaller on coordinate %d'
                        % (w.coords, node.point.coords, node.disc) )
                if not isLeft and not w.coords[ell] >= pivot:
                    problems.append( '%s is right of %s but smaller on coordinate %d'
                        % (w.coords, node.point.coords, node.disc) )
            members.extend( below )
        upper = tuple( max( w.coords[i] for w in members ) for i in range( d ) )
        if tuple( node.upper ) != upper:
            problems.append( 'upper bound of %s is %s, expected %s' % (node, node.upper, upper) )
        if tree.mode is TreeMode.UpperAndLower:
            lower = tuple( min( w.coords[i] for w in members ) for i in range( d ) )
            if node.lower is None or tuple( node.lower ) != lower:
                problems.append( 'lower bound of %s is %s, expected %s' % (node, node.lower, lower) )
        subtreePoints[id( node )] = members
    if len( order ) != tree.size:
        problems.append( 'tree has %d nodes but size %d' % (len( order ), tree.size) )
    return problems
