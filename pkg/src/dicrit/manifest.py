"""Expected counts for every reproduction.

Two ledgers.  PUBLISHED holds the values printed in the source text this
package reproduces.  DERIVED holds the values this package computes, each
frozen only after an independent cross-check (brute-force re-enumeration,
per-base orientation verification, or an alternative construction of the
same set).

Pipelines compare their outputs against PUBLISHED and surface any
difference as a report discrepancy; the test suite asserts the DERIVED
values exactly.  Where the two ledgers disagree the derived number is the
one an independent recount supports, and the disagreement itself is part
of the expected output, never silently patched in either direction.
"""

# Counts printed in the source text.
PUBLISHED = {
    # 8-vertex tournament classes enumerated during the n=8 census
    "tournaments_8": 6440,
    # 7-vertex tournaments that cannot be 2-dicolored
    "three_dichromatic_tournaments_7": 4,
    # 8-vertex tournaments surviving both census filters
    "census_8_tournaments": 64,
    # 3-dicritical classes obtained by arc-deletion descent from the 64
    "dicritical_8": 159,
    "dicritical_8_histogram": {21: 1, 22: 11, 23: 84, 24: 51, 25: 12},
    # combined over 7 and 8 vertices: "one had 20 arcs" / three had 21
    "dicritical_20_arcs_total": 1,
    "dicritical_21_arcs_total": 3,
    # 9-vertex minimum-arc exhaustion
    "min_arcs_9_orientations": {19: 33700, 20: 721603},
    "min_arcs_9_failures": {19: 0, 20: 0},
    # size of the tournament covering set
    "cover_size": 9,
}

# Values computed here and frozen after independent verification.
DERIVED = {
    # tournament classes by vertex count, confirmed by permutation-min
    # brute force at n<=5 and by Burnside counting at every n; 6880
    # disagrees with the published 6440
    "tournaments": {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456, 8: 6880},
    # oriented-graph classes by vertex count, same two confirmations
    "oriented_graphs": {1: 1, 2: 2, 3: 7, 4: 42, 5: 582, 6: 21480},
    "three_dichromatic_tournaments_7": 4,
    # 7-vertex 3-dicritical classes; histogram consistent with the
    # published combined statement (20 arcs: 1+0, 21 arcs: 2+1)
    "dicritical_7": 3,
    "dicritical_7_histogram": {20: 1, 21: 2},
    "census_8_tournaments": 64,
    "dicritical_8": 159,
    "dicritical_8_histogram": {21: 1, 22: 11, 23: 84, 24: 51, 25: 12},
    # base graphs: 9 vertices, min degree 4, by edge count; the 19-edge
    # set was re-derived as single-edge deletions of the 20-edge set
    "min_arcs_9_bases": {19: 154, 20: 714},
    # orientation classes with min in- and out-degree 2; every base with a
    # nontrivial automorphism group was re-counted by brute force over all
    # labeled orientations, zero mismatches; 33720 disagrees with the
    # published 33700 while 721603 matches exactly
    "min_arcs_9_orientations": {19: 33720, 20: 721603},
    "min_arcs_9_failures": {19: 0, 20: 0},
    # saturated 2-dichromatic oriented graphs (tournaments excluded)
    "saturated_two_dichromatic": {3: 0, 4: 0, 5: 0},
    # minimum cover of the 64 census tournaments by the 159 dicritical
    # classes; the published 9 used an unrecorded candidate pool, so only
    # the bound cover_size <= 9 transfers
    "cover_size": 7,
    "cover_containment_extremes": (2, 21),
}


def published_minarcs_orientations(edge_count: int) -> int:
    return PUBLISHED["min_arcs_9_orientations"][edge_count]


def derived_minarcs_orientations(edge_count: int) -> int:
    return DERIVED["min_arcs_9_orientations"][edge_count]
