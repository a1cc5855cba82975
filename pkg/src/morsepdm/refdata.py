"""Published reference energies for the built-in molecules.

Used by the CLI table command for regression comparison. Values are binding
energies -E in eV, exactly as printed in the source tables (ids 2 through
6). Table 2 holds the constant-mass vibrational levels ("exact" column) for
all four molecules; tables 3 to 6 hold varying-mass levels, one molecule
each, computed with the Weyl ordering.
"""

from __future__ import annotations

#: Per-table absolute tolerance in eV for the diff report exit status.
TABLE_TOLERANCE = {2: 1e-5, 3: 5e-4, 4: 5e-4, 5: 5e-4, 6: 5e-4}

#: Molecule covered by each varying-mass table.
TABLE_MOLECULE = {3: "H2", 4: "LiH", 5: "HCl", 6: "CO"}

#: Mass couplings of the varying-mass tables, column order.
TABLE_EPSILONS = (0.1, 0.2, 0.4, 0.6, 0.8)

#: Constant-mass binding energies -E_n (eV), the "exact" column.
TABLE2_EXACT: dict[str, tuple[tuple[int, float], ...]] = {
    "H2": (
        (0, 4.476013), (1, 3.962315), (2, 3.479919), (3, 3.028824),
        (4, 2.609030), (5, 2.220537), (6, 1.863345), (7, 1.537455),
        (8, 1.242866), (9, 0.979579), (10, 0.747592), (11, 0.546907),
        (12, 0.377523), (13, 0.239441), (14, 0.132659),
    ),
    "LiH": (
        (0, 2.428863), (1, 2.260548), (2, 2.098276), (3, 1.942047),
        (4, 1.791862), (5, 1.647720), (6, 1.509621), (7, 1.377565),
        (8, 1.251552), (9, 1.131583), (10, 1.017656), (11, 0.909773),
        (12, 0.807934), (13, 0.712137), (14, 0.622384), (20, 0.210771),
        (25, 0.033949),
    ),
    "HCl": (
        (0, 4.435564), (1, 4.079710), (2, 3.738734), (3, 3.412635),
        (4, 3.101414), (5, 2.805071), (6, 2.523605), (7, 2.257018),
        (8, 2.005307), (9, 1.768475), (10, 1.546520), (11, 1.339442),
        (12, 1.147243), (13, 0.969921), (14, 0.807476), (18, 0.306476),
        (21, 0.086940),
    ),
    "CO": (
        (0, 11.091535), (1, 10.825822), (2, 10.563330), (3, 10.304060),
        (4, 10.048011), (5, 9.795184), (6, 9.545578), (7, 9.299193),
        (8, 9.056030), (9, 8.816089), (10, 8.579369), (11, 8.345870),
        (12, 8.115593), (13, 7.888538), (14, 7.664704), (18, 6.801582),
        (21, 6.188066), (40, 2.975752), (60, 0.850621),
    ),
}

#: Printed n_max row of the constant-mass table (this work, TJM, exact).
TABLE2_NMAX = {
    "H2": (17, 17, 17),
    "LiH": (29, 29, 29),
    "HCl": (24, 24, 25),
    "CO": (83, 70, 83),
}

#: Final bound level and its energy (eV) from the table footnotes.
FOOTNOTE_LEVELS = {
    "H2": (17, -1.231e-4),
    "LiH": (29, -1.270e-3),
    "HCl": (24, -1.303e-3),
    "CO": (83, -5.533e-7),
}

#: Varying-mass binding energies -E (eV), Weyl ordering.
#: Layout: {(n, l): (value at eps 0.1, 0.2, 0.4, 0.6, 0.8)}.
TABLE3_H2: dict[tuple[int, int], tuple[float, ...]] = {
    (0, 0): (4.50225, 4.52872, 4.58235, 4.63693, 4.69249),
    (0, 5): (4.28381, 4.30903, 4.36013, 4.41211, 4.46500),
    (0, 10): (3.74413, 3.76649, 3.81179, 3.85783, 3.90464),
    (5, 0): (2.40244, 2.60453, 3.08164, 3.68310, 4.45420),
    (5, 5): (2.21522, 2.40560, 2.85376, 3.41631, 4.13393),
    (5, 10): (1.75241, 1.91639, 2.29973, 2.77597, 3.37626),
    (6, 0): (2.05564, 2.27409, 2.80923, 3.52119, 4.49254),
    (6, 5): (1.87538, 2.08053, 2.58134, 3.24410, 4.14254),
    (6, 10): (1.42962, 1.60492, 2.02927, 2.58373, 3.32397),
    (10, 0): (0.92597, 1.15200, 1.81804, 2.98370, 5.21197),
    (10, 5): (0.77583, 0.98431, 1.59521, 2.65381, 4.64747),
    (10, 10): (0.40369, 0.57355, 1.06486, 1.89674, 3.41028),
}

TABLE4_LIH: dict[tuple[int, int], tuple[float, ...]] = {
    (0, 0): (2.43768, 2.44655, 2.46442, 2.48249, 2.50075),
    (0, 5): (2.41006, 2.41884, 2.43653, 2.45441, 2.47248),
    (0, 10): (2.33733, 2.34587, 2.36308, 2.38048, 2.39806),
    (5, 0): (1.72034, 1.79750, 1.96699, 2.15972, 2.38005),
    (5, 5): (1.69554, 1.77179, 1.93925, 2.12963, 2.34720),
    (5, 10): (1.63030, 1.70418, 1.86636, 2.05061, 2.26102),
    (6, 0): (1.59062, 1.67773, 1.87272, 2.10049, 2.36859),
    (6, 5): (1.56642, 1.65247, 1.84506, 2.06994, 2.33456),
    (6, 10): (1.50275, 1.58605, 1.77237, 1.98976, 2.24532),
    (10, 0): (1.11912, 1.23396, 1.51359, 1.88229, 2.38007),
    (10, 5): (1.09738, 1.21064, 1.48633, 1.84964, 2.33981),
    (10, 10): (1.04023, 1.14939, 1.41484, 1.76417, 2.23467),
}

TABLE5_HCL: dict[tuple[int, int], tuple[float, ...]] = {
    (0, 0): (4.45401, 4.47257, 4.51004, 4.54797, 4.58636),
    (0, 5): (4.41514, 4.43358, 4.47079, 4.50847, 4.54661),
    (0, 10): (4.31208, 4.33018, 4.36673, 4.40373, 4.44119),
    (5, 0): (2.95182, 3.10936, 3.46114, 3.87054, 4.35052),
    (5, 5): (2.91768, 3.07397, 3.42293, 3.82903, 4.30512),
    (5, 10): (2.82723, 2.98020, 3.32173, 3.71913, 4.18495),
    (6, 0): (2.68546, 2.86170, 3.26429, 3.74829, 4.33645),
    (6, 5): (2.65231, 2.82709, 3.22634, 3.70629, 4.28950),
    (6, 10): (2.56449, 2.73542, 3.12585, 3.59513, 4.16527),
    (10, 0): (1.73795, 1.95977, 2.52156, 3.30651, 4.44118),
    (10, 5): (1.70888, 1.92854, 2.48486, 3.26213, 4.38560),
    (10, 10): (1.63195, 1.84591, 2.38780, 3.14483, 4.23882),
}

TABLE6_CO: dict[tuple[int, int], tuple[float, ...]] = {
    (0, 0): (11.1049, 11.1184, 11.1453, 11.1723, 11.1994),
    (0, 5): (11.0978, 11.1112, 11.1381, 11.1651, 11.1922),
    (0, 10): (11.0787, 11.0921, 11.1190, 11.1460, 11.1730),
    (5, 0): (9.9302, 10.068, 10.3521, 10.648, 10.9566),
    (5, 5): (9.92329, 10.061, 10.3449, 10.6408, 10.9492),
    (5, 10): (9.90487, 10.0424, 10.326, 10.6214, 10.9294),
    (6, 0): (9.7024, 9.86303, 10.1961, 10.5459, 10.9135),
    (6, 5): (9.69554, 9.85609, 10.189, 10.5387, 10.9061),
    (6, 10): (9.67726, 9.83758, 10.1701, 10.5192, 10.8862),
    (10, 0): (8.81530, 9.06065, 9.58165, 10.1468, 10.7611),
    (10, 5): (8.80864, 9.05387, 9.57459, 10.1394, 10.7534),
    (10, 10): (8.79088, 9.03577, 9.55577, 10.1198, 10.7329),
}

PDM_TABLES = {3: TABLE3_H2, 4: TABLE4_LIH, 5: TABLE5_HCL, 6: TABLE6_CO}


def table_cells(table_id: int):
    """Yield (molecule, n, l, epsilon, reference_binding_energy) per cell."""
    if table_id == 2:
        for mol, rows in TABLE2_EXACT.items():
            for n, value in rows:
                yield mol, n, 0, 0.0, value
        return
    if table_id not in PDM_TABLES:
        raise ValueError(f"table id must be one of 2, 3, 4, 5, 6; got {table_id}")
    mol = TABLE_MOLECULE[table_id]
    for (n, l), values in PDM_TABLES[table_id].items():
        for eps, value in zip(TABLE_EPSILONS, values):
            yield mol, n, l, eps, value
