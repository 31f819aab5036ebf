"""Published relative-error tables for the truncated lower sum L and the upper envelope U.

Rows are (mu, nu, beta); columns are the x values in ``TABLE_XS``.
Table 1 holds 1 - L/F, Table 2 holds U/F - 1.
"""

TABLE_XS = (0.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0)

TABLE_ORDERS = (
    (0.5, 1.0), (4.5, 5.0), (9.5, 10.0),
    (3.0, 1.0), (7.0, 5.0), (12.0, 10.0),
    (6.0, 1.0), (10.0, 5.0), (15.0, 10.0),
)

TABLE_BETAS = (0.25, 0.5)

TABLE_ROWS = tuple((mu, nu, beta) for beta in TABLE_BETAS for mu, nu in TABLE_ORDERS)

TABLE1 = {
    (0.5, 1.0, 0.25): (0.2280, 0.2066, 0.1419, 0.1028, 0.0656, 0.0346, 0.0182),
    (4.5, 5.0, 0.25): (0.0812, 0.0853, 0.0778, 0.0670, 0.0503, 0.0302, 0.0169),
    (9.5, 10.0, 0.25): (0.0449, 0.0474, 0.0471, 0.0445, 0.0378, 0.0257, 0.0155),
    (3.0, 1.0, 0.25): (0.1461, 0.1591, 0.1351, 0.1024, 0.0656, 0.0346, 0.0182),
    (7.0, 5.0, 0.25): (0.0676, 0.0737, 0.0737, 0.0664, 0.0503, 0.0302, 0.0169),
    (12.0, 10.0, 0.25): (0.0404, 0.0431, 0.0447, 0.0438, 0.0378, 0.0257, 0.0155),
    (6.0, 1.0, 0.25): (0.1019, 0.1151, 0.1158, 0.0991, 0.0656, 0.0346, 0.0182),
    (10.0, 5.0, 0.25): (0.0562, 0.0615, 0.0650, 0.0633, 0.0503, 0.0302, 0.0169),
    (15.0, 10.0, 0.25): (0.0360, 0.0385, 0.0406, 0.0414, 0.0376, 0.0257, 0.0155),
    (0.5, 1.0, 0.5): (0.2348, 0.2723, 0.2280, 0.1845, 0.1341, 0.0869, 0.0602),
    (4.5, 5.0, 0.5): (0.0825, 0.1000, 0.1047, 0.1005, 0.0881, 0.0680, 0.0522),
    (9.5, 10.0, 0.5): (0.0453, 0.0524, 0.0573, 0.0591, 0.0580, 0.0515, 0.0440),
    (3.0, 1.0, 0.5): (0.1497, 0.2011, 0.2096, 0.1821, 0.1341, 0.0869, 0.0602),
    (7.0, 5.0, 0.5): (0.0685, 0.0849, 0.0976, 0.0900, 0.0881, 0.0680, 0.0522),
    (12.0, 10.0, 0.5): (0.0407, 0.0473, 0.0539, 0.0578, 0.0579, 0.0515, 0.0440),
    (6.0, 1.0, 0.5): (0.1038, 0.1396, 0.1696, 0.1708, 0.1339, 0.0869, 0.0602),
    (10.0, 5.0, 0.5): (0.0569, 0.0696, 0.0836, 0.0923, 0.0879, 0.0680, 0.0522),
    (15.0, 10.0, 0.5): (0.0363, 0.0418, 0.0483, 0.0539, 0.0576, 0.0515, 0.0440),
}

TABLE2 = {
    (0.5, 1.0, 0.25): (8.1497, 0.2771, 0.0872, 0.0520, 0.0292, 0.0139, 0.0068),
    (4.5, 5.0, 0.25): (29.3965, 2.1107, 0.8520, 0.5130, 0.2806, 0.1300, 0.0625),
    (9.5, 10.0, 0.25): (56.0364, 4.6324, 1.9741, 1.1881, 0.6377, 0.2868, 0.1351),
    (3.0, 1.0, 0.25): (14.7434, 0.6111, 0.1129, 0.0531, 0.0292, 0.0139, 0.0068),
    (7.0, 5.0, 0.25): (36.0379, 2.5889, 0.9315, 0.5206, 0.2807, 0.1300, 0.0625),
    (12.0, 10.0, 0.25): (62.6900, 5.1844, 2.1181, 1.2153, 0.6380, 0.2868, 0.1351),
    (6.0, 1.0, 0.25): (22.7139, 1.2479, 0.2457, 0.0682, 0.0292, 0.0139, 0.0068),
    (10.0, 5.0, 0.25): (44.0269, 3.3075, 1.1618, 0.5736, 0.2811, 0.1300, 0.0625),
    (15.0, 10.0, 0.25): (70.6841, 5.9372, 2.4131, 1.3226, 0.6415, 0.2868, 0.1351),
    (0.5, 1.0, 0.5): (12.3403, 0.4845, 0.1485, 0.0836, 0.0452, 0.0212, 0.0103),
    (4.5, 5.0, 0.5): (44.1357, 3.2057, 1.3045, 0.7861, 0.4286, 0.1972, 0.0943),
    (9.5, 10.0, 0.5): (84.0773, 6.9721, 2.9816, 1.7983, 0.9664, 0.4339, 0.2037),
    (3.0, 1.0, 0.5): (22.1891, 0.9907, 0.2014, 0.0879, 0.0452, 0.0212, 0.0103),
    (7.0, 5.0, 0.5): (54.0910, 3.9205, 1.4276, 0.7992, 0.4286, 0.1972, 0.0943),
    (12.0, 10.0, 0.5): (94.0552, 7.7986, 3.1985, 1.8404, 0.9667, 0.4339, 0.2037),
    (6.0, 1.0, 0.5): (34.1224, 1.9315, 0.4148, 0.1205, 0.0455, 0.0212, 0.0103),
    (10.0, 5.0, 0.5): (66.0687, 4.9932, 1.7741, 0.8834, 0.4297, 0.1972, 0.0943),
    (15.0, 10.0, 0.5): (106.0445, 8.9256, 3.6404, 2.0030, 0.9727, 0.4339, 0.2037),
}

GOLDEN = {1: TABLE1, 2: TABLE2}
