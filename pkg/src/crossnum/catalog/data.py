"""Coordinate data: wings, explicit sets, base sets and cluster models.

Decimals are kept as strings and parsed exactly.  Rotated copies are never
stored; they are generated with ``rotate120``.
"""
from __future__ import annotations

K24_WING = """
-51 113
6 834
16 989
18 644
18 1068
22 211
-26 313
17 1036
"""

K42_WING = """
620 308
1260 -504
1288 -482
1396 -427
2564 206
2775 173
3806 25
5250 -229
8891 12
9315 10
10634 -6
11224 13
12322 21
19157 64
"""

K48_WING = """
-57807.48847 99345.28317
-57806.65857 99343.86617
-34105.90293 58848.08466
-37110.08631 64005.82257
-31864.30787 55277.26387
-27997.58687 48376.53697
-26732.18287 46163.98867
-14558.27587 27959.08197
-17179.16207 31883.97347
-11528.14000 19697.46500
-9487.09731 14127.03628
-3461.52707 2301.65997
-3460.33257 2299.31657
-1969.55837 8536.56197
-1305.99477 8113.10777
-1153.06188 8052.81507
"""

K51_WING = """
3716.08787 1847.16703
3723.66827 1846.89633
7559.84917 -3018.73497
7681.27767 -2924.32337
8372.80747 -2555.43267
15380.80127 1242.65413
22830.08397 149.29793
22833.62767 150.01693
32961.31257 -1302.20837
36202.07107 -1066.09417
53346.71877 75.35363
55888.52997 69.24083
63804.95917 -36.22667
63807.51607 -36.12177
73923.83417 125.04913
73924.52987 125.05093
114944.97357 395.74573
"""

K54_WING = """
-57807.48847 99345.28317
-57806.65857 99343.86617
-34105.90293 58848.08466
-37110.08631 64005.82257
-31864.30787 55277.26387
-27997.58687 48376.53697
-26732.18287 46163.98867
-17179.16207 31883.97347
-17177.09877 31880.90437
-12710.94699 25192.60584
-11528.14000 19697.46500
-9224.14377 13900.95197
-8764.40677 12704.76127
-3461.52707 2301.65997
-3460.33257 2299.31657
-1969.55837 8536.56197
-1305.99477 8113.10777
-1153.06188 8052.81507
"""

K57_WING = """
-31817.67721 55426.14425
-69368.98616 119214.33860
-69367.99028 119212.63940
-40804.41177 70433.67069
-35943.52523 62061.44313
-32126 55922
-28013.28687 48376.53697
-26778.48287 46163.98867
-17179.16207 31883.97347
-17177.09877 31880.90437
-12710.94699 25192.60584
-11528.14 19697.465
-9224.14377 13900.95197
-8764.40677 12704.76127
-3461.52707 2301.65997
-3460.33257 2299.31657
-1969.55837 8536.56197
-1305.99477 8113.10777
-1153.06188 8052.81507
"""

# base sets: explicit points by 1-based index, then index -> (power, source)
BASE30_EXPLICIT = {
    1: ("-500218.885", "793018.474"),
    2: ("-451723.944", "711948.989"),
    5: ("-200125.330", "285855.310"),
    6: ("-158721.037", "223132.241"),
    9: ("-103183.924", "120586.624"),
    10: ("-88519.236", "109026.774"),
    11: ("-70502.886", "100103.259"),
    12: ("-66221.918", "53889.958"),
    13: ("-65940.116", "50836.878"),
    18: ("-13567.216", "45695.226"),
}

BASE30_ROTATED = {
    3: (1, 1), 4: (1, 2), 7: (1, 5), 8: (1, 6), 14: (1, 9), 16: (1, 10),
    15: (1, 11), 19: (1, 12), 20: (1, 13), 17: (1, 18),
    30: (2, 1), 29: (2, 2), 28: (2, 5), 27: (2, 6), 26: (2, 9), 25: (2, 10),
    24: (2, 11), 23: (2, 12), 22: (2, 13), 21: (2, 18),
}

BASE51_EXPLICIT = {
    1: ("114935.3031", "381.37451"),
    2: ("73931.7862", "127.25511"),
    3: ("67347.3942", "75.62961"),
    4: ("63815.8559", "-37.63049"),
    5: ("55899.7316", "58.88221"),
    6: ("53352.4837", "69.45451"),
    7: ("36214.634", "-1062.97569"),
    8: ("31509.8338", "-1373.94309"),
    9: ("22847.349", "151.00411"),
    10: ("17043.162", "1175.66911"),
    11: ("16655.0717", "1034.97731"),
    12: ("15393.4257", "1230.20761"),
    13: ("8387.4352", "-2549.11369"),
    14: ("7690.1479", "-2921.61509"),
    15: ("7573.2312", "-3011.73969"),
    16: ("3717.1198", "1845.13511"),
    17: ("3714.3655", "1845.37901"),
}

BASE51_ROTATED = {
    18: (2, 17), 19: (2, 16), 20: (1, 15), 21: (1, 14), 22: (1, 13), 23: (1, 17),
    24: (1, 16), 25: (2, 14), 26: (2, 15), 27: (2, 13), 28: (2, 12), 29: (2, 11),
    30: (2, 10), 31: (1, 12), 32: (1, 11), 33: (1, 10), 34: (2, 9), 35: (1, 9),
    36: (1, 8), 37: (2, 8), 38: (1, 7), 39: (2, 7), 40: (2, 6), 41: (1, 6),
    42: (2, 5), 43: (1, 5), 44: (1, 4), 45: (2, 4), 46: (2, 3), 47: (1, 3),
    48: (2, 2), 49: (1, 2), 50: (2, 1), 51: (1, 1),
}

MODELS = {
    "A4": [(0, 16865), (41470, 13435), (2213, 0), (24229, 14674)],
    "A5": [(56337, 50707), (0, 38814), (42575, 0), (51990, 40716), (30815, 21467)],
    "A6": [(31913, 61624), (0, 39366), (13197, 35824), (49018, 0), (27438, 48183),
           (34377, 27824)],
    "A7": [(10881, 31696), (36061, 6218), (5214, 39717), (0, 59285), (8359, 24119),
           (59, 26990), (44957, 0)],
    "A8": [(55255, 59712), (16631, 25552), (23666, 43408), (26741, 44334), (15615, 0),
           (3227, 56082), (0, 62548), (12393, 15412)],
    "A9": [(15928, 20352), (22642, 16618), (3049, 0), (18325, 13804), (32948, 11155),
           (15236, 11815), (0, 29904), (30218, 12585), (3815, 27123)],
    "A12": [(13290, 30827), (45233, 24125), (10217, 11859), (6294, 0), (0, 49579),
            (13699, 33996), (2314, 46508), (16411, 17184), (29175, 22801),
            (52500, 24275), (24447, 26182), (8784, 6906)],
}

# values stated in the source text
EXPECTED = {
    "K24": 3699,
    "K42": 40593,
    "K48": 71022,
    "K51": 91452,
    "K54": 115977,
    "K57": 145176,
    "base30": 9726,
    "K33": 14634,
    "K60": 179541,
    "K63": 219681,
    "K66": 266181,
    "K69": 319731,
    "K72": 380964,
    "K75": 450540,
    "K78": 529332,
    "K81": 618018,
    "K84": 717360,
    "K87": 828225,
    "K90": 951459,
    "K93": 1088055,
    "K96": 1238646,
    "K99": 1404552,
    "K315": 152210640,
}

# best known counts by n: (previous best, 3-symmetric value)
TABLE1 = {
    30: (9726, 9726), 33: (14634, 14634), 36: (21175, 21174), 39: (29715, 29715),
    42: (40595, 40593), 45: (54213, 54213), 48: (71025, 71022), 51: (91452, 91452),
    54: (115994, 115977), 57: (145178, 145176), 60: (179541, 179541),
    63: (219683, 219681), 66: (266188, 266181), 69: (319737, 319731),
    72: (380978, 380964), 75: (450550, 450540), 78: (529350, 529332),
    81: (618048, 618018), 84: (717384, 717360), 87: (828233, 828225),
    90: (951526, 951459), 93: (1088217, 1088055), 96: (1239003, 1238646),
    99: (1405132, 1404552), 315: (None, 152210640),
}

# rows whose drawings exist only as figures
NOT_REPRODUCIBLE = (27, 36, 39, 45)
