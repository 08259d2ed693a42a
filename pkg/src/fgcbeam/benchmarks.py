"""Embedded benchmark tables and the comparison gate.

The fixtures transcribe the published reference values for this exact
element formulation (tables T6 through T19): nondimensional midspan/tip
deflections, axial stress at (L/2, +h/2) and transverse shear stress at
(0, 0) for the three section families under SS/CC/CF supports, straight
and curved, all at the reference mesh of 16 elements.  Tolerance
classes: 0.1 percent for straight-beam tables, 0.2 percent for
curved-beam tables (print rounding is 4-5 significant figures).

A handful of printed cells are provably defective and are excluded from
the gate (reported as skipped, never compared): cells that duplicate a
neighboring row verbatim while breaking the row's own monotone trend,
the T12 cells that contradict T7/T16 where the three tables print the
very same physical configuration, and the Type C p = 0 deflection and
axial stress cells, whose print disagrees by 0.5-0.6 percent with the
two reference solutions quoted beside them (every other index agrees
within 0.1 percent) and which fall outside the source's stated p
protocol.  Each such cell carries its reason string.

Tables T3-T5 (deflection convergence histories) are shipped for their
monotone mesh-refinement pattern only; their absolute values depend on
a geometry that is not recoverable and are never compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .config import CaseConfig
from .materials import DEFAULT_MATERIAL, Layup, LayupKind
from .solver import BoundaryCondition, LoadCase

INF = math.inf

#: Column order of the curved tables.
R_COLS = (5.0, 10.0, 20.0, 50.0, 100.0, INF)

TOL_STRAIGHT = 1e-3
TOL_CURVED = 2e-3

_SCHEMES = {"1-1-1": (1, 1, 1), "1-2-1": (1, 2, 1),
            "2-1-1": (2, 1, 1), "2-2-1": (2, 2, 1), "1-8-1": (1, 8, 1)}


@dataclass(frozen=True)
class BenchmarkCell:
    """One printed value with full case coordinates.

    quantity is 'w_bar', 'sigma_bar' or 'tau_bar'.  ``suspect`` is None
    for gated cells, otherwise the reason the print is excluded.
    """

    table: str
    row: str
    col: str
    quantity: str
    kind: LayupKind
    scheme: tuple[float, float, float]
    p: float
    L_over_h: float
    R_over_L: float
    bc: str
    expected: float
    tol: float
    suspect: str | None = None

    def case_key(self) -> tuple:
        return (self.kind.value, self.scheme, self.p, self.L_over_h,
                self.R_over_L, self.bc)

    def to_config(self, ne: int = 16) -> CaseConfig:
        kind = self.kind
        h = 1.0
        layup = (Layup.single_layer(self.p, h) if kind is LayupKind.A
                 else Layup(kind, self.scheme, self.p, h))
        return CaseConfig(material=DEFAULT_MATERIAL, layup=layup,
                          L=self.L_over_h * h, R_over_L=self.R_over_L,
                          bc=BoundaryCondition(self.bc),
                          load=LoadCase.udl(1.0), ne=ne)


def _rl_label(rl: float) -> str:
    return "R/L=inf" if math.isinf(rl) else f"R/L={rl:g}"


# --- reasons attached to excluded cells -------------------------------------

_DUP_ROW = ("printed value duplicates the neighboring row's cell verbatim and breaks "
            "the row's monotone trend")
_T12_BLOCK = ("inconsistent with tables T7/T16: at p=0 this configuration is the same "
              "homogeneous ceramic beam printed there as 2.9453, and the block's "
              "curvature deltas run ~4x the trend of every other curved table")
_TYPEC_P0 = ("Type C p=0 print disagrees with the reference solutions quoted in the "
             "same row by 0.5-0.6% (all other p agree within 0.1%) and p=0 is outside "
             "the source's stated index protocol for this layup")

_T7_SUSPECT = {(10, 1, 50.0): _DUP_ROW}
_T12_SUSPECT = {
    (5, 2, 5.0): _T12_BLOCK, (5, 5, 5.0): _T12_BLOCK, (5, 10, 5.0): _T12_BLOCK,
    (10, 0, 5.0): _T12_BLOCK, (10, 0, 10.0): _T12_BLOCK,
    (10, 1, 5.0): _T12_BLOCK, (10, 1, 10.0): _T12_BLOCK,
    (10, 2, 5.0): _T12_BLOCK, (10, 2, 10.0): _T12_BLOCK, (10, 2, 50.0): _DUP_ROW,
    (10, 5, 5.0): _T12_BLOCK,
    (10, 10, 5.0): _T12_BLOCK, (10, 10, 10.0): _T12_BLOCK, (10, 10, 20.0): _T12_BLOCK,
}


# --- table data (Present rows only) ------------------------------------------

# T6: single-layer (A), straight, SS, rows (L/h, p) -> (w_bar, sigma_bar, tau_bar)
_T6 = {
    (5, 0): (3.1652, 3.8136, 0.7534), (5, 1): (6.2563, 5.9061, 0.7534),
    (5, 2): (8.0628, 6.9090, 0.6908), (5, 5): (9.8276, 8.1460, 0.6111),
    (5, 10): (10.937, 9.7544, 0.6675),
    (20, 0): (2.8962, 15.0525, 0.7626), (20, 1): (5.8021, 23.2833, 0.7626),
    (20, 2): (7.4366, 27.1888, 0.7003), (20, 5): (8.8128, 31.9301, 0.6212),
    (20, 10): (9.6868, 38.2826, 0.6785),
}

# T7: single-layer (A), curved, SS, w_bar over R_COLS
_T7 = {
    (5, 0): (3.1638, 3.1649, 3.1651, 3.1652, 3.1652, 3.1652),
    (5, 1): (6.2480, 6.2528, 6.2547, 6.2557, 6.2560, 6.2563),
    (5, 2): (8.0513, 8.0578, 8.0605, 8.0619, 8.0624, 8.0628),
    (5, 5): (9.8153, 9.8223, 9.8251, 9.8266, 9.8271, 9.8276),
    (5, 10): (10.925, 10.932, 10.934, 10.936, 10.936, 10.937),
    (10, 0): (2.9453, 2.9489, 2.9498, 2.9500, 2.9501, 2.9501),
    (10, 1): (5.8729, 5.8853, 5.8897, 2.9500, 5.8924, 5.8930),
    (10, 2): (7.5354, 7.5514, 7.5573, 7.5603, 7.5611, 7.5620),
    (10, 5): (8.9883, 9.0050, 9.0112, 9.0142, 9.0151, 9.0160),
    (10, 10): (9.9110, 9.9271, 9.9329, 9.9357, 9.9364, 9.9372),
}

# T8: single-layer (A), curved, SS, tau/sigma over R_COLS
_T8_TAU = {
    (5, 0): (0.7532, 0.7534, 0.7534, 0.7534, 0.7534, 0.7534),
    (5, 1): (0.7528, 0.7532, 0.7532, 0.7534, 0.7534, 0.7534),
    (5, 2): (0.6902, 0.6906, 0.6906, 0.6907, 0.6908, 0.6908),
    (5, 5): (0.6107, 0.6109, 0.6109, 0.6111, 0.6111, 0.6111),
    (5, 10): (0.6671, 0.6673, 0.6673, 0.6675, 0.6675, 0.6675),
    (10, 0): (0.7595, 0.7602, 0.7604, 0.7605, 0.7605, 0.7605),
    (10, 1): (0.7588, 0.7599, 0.7603, 0.7604, 0.7605, 0.7605),
    (10, 2): (0.6966, 0.6975, 0.6979, 0.6980, 0.6981, 0.6981),
    (10, 5): (0.6176, 0.6184, 0.6186, 0.6187, 0.6188, 0.6188),
    (10, 10): (0.6748, 0.6755, 0.6758, 0.6759, 0.6759, 0.6759),
}
_T8_SIG = {
    (5, 0): (3.8172, 3.8158, 3.8148, 3.8141, 3.8139, 3.8136),
    (5, 1): (5.9005, 5.9040, 5.9040, 5.9058, 5.9060, 5.9061),
    (5, 2): (6.9000, 6.9052, 6.9052, 6.9083, 6.9087, 6.9090),
    (5, 5): (8.1387, 8.1431, 8.1431, 8.1455, 8.1458, 8.1460),
    (5, 10): (9.7511, 9.7536, 9.7536, 9.7544, 9.7544, 9.7544),
    (10, 0): (7.5538, 7.5533, 7.5507, 7.5483, 7.5474, 7.5465),
    (10, 1): (11.644, 11.665, 11.671, 11.674, 11.675, 11.675),
    (10, 2): (13.594, 13.621, 13.631, 13.636, 13.637, 13.639),
    (10, 5): (15.992, 16.016, 16.024, 16.028, 16.029, 16.030),
    (10, 10): (19.189, 19.208, 19.213, 19.214, 19.214, 19.214),
}

# T9/T10/T11: FG-face sandwich (B), straight, SS;
# rows (L/h, p) -> values per scheme (1-1-1, 1-2-1, 2-1-1, 2-2-1)
_B_SCHEMES = ("1-1-1", "1-2-1", "2-1-1", "2-2-1")
_T9 = {
    (5, 0): (3.1652, 3.1652, 3.1652, 3.1652),
    (5, 1): (6.2688, 5.4125, 6.5440, 5.8399),
    (5, 2): (8.3880, 6.7581, 8.8871, 7.5570),
    (5, 5): (11.2242, 8.5134, 11.8189, 9.7885),
    (5, 10): (12.5612, 9.4041, 13.0064, 10.8439),
    (20, 0): (2.8962, 2.8962, 2.8962, 2.8962),
    (20, 1): (5.9400, 5.1006, 6.1973, 5.5158),
    (20, 2): (8.0312, 6.4276, 8.4991, 7.2072),
    (20, 5): (10.8374, 8.1642, 11.3756, 9.4103),
    (20, 10): (12.1590, 9.0470, 12.5249, 10.4503),
}
_T10 = {
    (5, 0): (3.8136, 3.8136, 3.8136, 3.8136),
    (5, 1): (1.4391, 1.2366, 1.3931, 1.2517),
    (5, 2): (1.9438, 1.5574, 1.8537, 1.5928),
    (5, 5): (2.6197, 1.9763, 2.4148, 2.0261),
    (5, 10): (2.9375, 2.1889, 2.6381, 2.2271),
    (20, 0): (15.0525, 15.0525, 15.0525, 15.0525),
    (20, 1): (5.6999, 4.8929, 5.5128, 4.9513),
    (20, 2): (7.7114, 6.1694, 7.3452, 6.3082),
    (20, 5): (10.4107, 7.8400, 9.5795, 8.0350),
    (20, 10): (11.6818, 8.6893, 10.4669, 8.8367),
}
_T11 = {
    (5, 0): (0.7534, 0.7534, 0.7534, 0.7534),
    (5, 1): (0.8782, 0.8329, 0.9299, 0.8684),
    (5, 2): (0.9433, 0.8696, 1.0344, 0.9274),
    (5, 5): (1.0280, 0.9116, 1.1948, 1.0047),
    (5, 10): (1.0800, 0.9333, 1.3090, 1.0517),
    (20, 0): (0.7626, 0.7626, 0.7626, 0.7626),
    (20, 1): (0.8844, 0.8390, 0.9365, 0.8747),
    (20, 2): (0.9491, 0.8751, 1.0411, 0.9333),
    (20, 5): (1.0343, 0.9171, 1.2022, 1.0107),
    (20, 10): (1.0865, 0.9390, 1.3172, 1.0578),
}

# T12: 1-1-1 sandwich (B), curved, SS, w_bar over R_COLS
_T12 = {
    (5, 0): (3.1595, 3.1628, 3.1650, 3.1652, 3.1652, 3.1652),
    (5, 1): (6.2529, 6.2641, 6.2681, 6.2686, 6.2687, 6.2687),
    (5, 2): (8.3633, 8.3809, 8.3870, 8.3878, 8.3879, 8.3880),
    (5, 5): (11.185, 11.214, 11.222, 11.223, 11.224, 11.224),
    (5, 10): (12.517, 12.549, 12.559, 12.560, 12.561, 12.561),
    (10, 0): (2.9312, 2.9379, 2.9470, 2.9499, 2.9500, 2.9501),
    (10, 1): (5.9486, 5.9690, 5.9965, 6.0054, 6.0057, 6.0057),
    (10, 2): (8.0116, 8.0440, 8.0878, 6.0054, 8.1024, 8.1025),
    (10, 5): (10.773, 10.891, 10.891, 10.913, 10.914, 10.914),
    (10, 10): (12.075, 12.133, 12.212, 12.238, 12.239, 12.239),
}

# T15: 1-1-1 sandwich (B), curved, CC and CF, w_bar over R_COLS
_T15 = {
    ("CC", 5, 0): (0.8170, 0.8327, 0.8368, 0.8379, 0.8381, 0.8381),
    ("CC", 5, 1): (1.4579, 1.4940, 1.5033, 1.5059, 1.5063, 1.5064),
    ("CC", 5, 2): (1.8816, 1.9340, 1.9476, 1.9514, 1.9520, 1.9522),
    ("CC", 5, 5): (2.4408, 2.5163, 2.5359, 2.5414, 2.5422, 2.5425),
    ("CC", 5, 10): (2.7063, 2.7920, 2.8143, 2.8206, 2.8215, 2.8218),
    ("CC", 10, 0): (0.5965, 0.6300, 0.6390, 0.6415, 0.6419, 0.6420),
    ("CC", 10, 1): (1.1409, 1.2314, 1.2563, 1.2635, 1.2645, 1.2648),
    ("CC", 10, 2): (1.4996, 1.6377, 1.6764, 1.6875, 1.6891, 1.6896),
    ("CC", 10, 5): (1.9719, 2.1789, 2.2376, 2.2546, 2.2571, 2.2579),
    ("CC", 10, 10): (2.1965, 2.4346, 2.5024, 2.5220, 2.5249, 2.5258),
    ("CF", 5, 0): (28.6872, 28.7203, 28.7286, 28.7309, 28.7312, 28.7313),
    ("CF", 5, 1): (58.0282, 58.1279, 58.1529, 58.1599, 58.1609, 58.1612),
    ("CF", 5, 2): (78.1225, 78.2811, 78.3209, 78.3321, 78.3337, 78.3342),
    ("CF", 5, 5): (105.048, 105.295, 105.357, 105.374, 105.377, 105.377),
    ("CF", 5, 10): (117.735, 118.022, 118.094, 118.114, 118.117, 118.118),
    ("CF", 10, 0): (27.7389, 27.8655, 27.8973, 27.9062, 27.9075, 27.9079),
    ("CF", 10, 1): (56.6357, 57.0216, 57.1190, 57.1463, 57.1502, 57.1515),
    ("CF", 10, 2): (76.4136, 77.0299, 77.1856, 77.2294, 77.2356, 77.2377),
    ("CF", 10, 5): (102.904, 103.865, 104.108, 104.176, 104.186, 104.189),
    ("CF", 10, 10): (115.387, 116.504, 116.787, 116.867, 116.878, 116.882),
}

# T16: 2-2-1 sandwich (B), curved, SS; w/tau/sigma blocks over R_COLS
_T16_W = {
    (5, 0): (3.1652, 3.1649, 3.1651, 3.1652, 3.1652, 3.1652),
    (5, 1): (5.8398, 5.8380, 5.8391, 5.8396, 5.8398, 5.8399),
    (5, 2): (7.5567, 7.5536, 7.5556, 7.5565, 7.5567, 7.5570),
    (5, 5): (9.7881, 9.7829, 9.7862, 9.7877, 9.7881, 9.7885),
    (5, 10): (10.843, 10.837, 10.841, 10.842, 10.843, 10.843),
    (10, 0): (2.9453, 2.9489, 2.9498, 2.9500, 2.9501, 2.9501),
    (10, 1): (5.5639, 5.5755, 5.5788, 5.5801, 5.5804, 5.5806),
    (10, 2): (7.2502, 7.2684, 7.2740, 7.2762, 7.2768, 7.2772),
    (10, 5): (9.4439, 9.4717, 9.4805, 9.4842, 9.4851, 9.4860),
    (10, 10): (10.479, 10.512, 10.522, 10.526, 10.528, 10.529),
}
_T16_TAU = {
    (5, 0): (0.7534, 0.7534, 0.7534, 0.7534, 0.7534, 0.7534),
    (5, 1): (0.8684, 0.8682, 0.8683, 0.8684, 0.8684, 0.8684),
    (5, 2): (0.9274, 0.9272, 0.9274, 0.9274, 0.9274, 0.9274),
    (5, 5): (1.0047, 1.0044, 1.0046, 1.0047, 1.0047, 1.0047),
    (5, 10): (1.0516, 1.0513, 1.0515, 1.0516, 1.0516, 1.0517),
    (10, 0): (0.7595, 0.7602, 0.7604, 0.7605, 0.7605, 0.7605),
    (10, 1): (0.8714, 0.8728, 0.8731, 0.8733, 0.8733, 0.8733),
    (10, 2): (0.9295, 0.9313, 0.9318, 0.9320, 0.9320, 0.9320),
    (10, 5): (1.0063, 1.0084, 1.0091, 1.0093, 1.0094, 1.0094),
    (10, 10): (1.0531, 1.0554, 1.0561, 1.0564, 1.0565, 1.0565),
}
_T16_SIG = {
    (5, 0): (3.8139, 3.8158, 3.8148, 3.8141, 3.8139, 3.8136),
    (5, 1): (1.2517, 1.2519, 1.2518, 1.2518, 1.2517, 1.2517),
    (5, 2): (1.5928, 1.5927, 1.5928, 1.5928, 1.5928, 1.5928),
    (5, 5): (2.0260, 2.0254, 2.0258, 2.0260, 2.0260, 2.0261),
    (5, 10): (2.2270, 2.2262, 2.2267, 2.2270, 2.2270, 2.2271),
    (10, 0): (7.5538, 7.5533, 7.5507, 7.5483, 7.5474, 7.5465),
    (10, 1): (2.4786, 2.4813, 2.4816, 2.4815, 2.4814, 2.4812),
    (10, 2): (3.1534, 3.1590, 3.1602, 3.1604, 3.1604, 3.1604),
    (10, 5): (4.0105, 4.0204, 4.0232, 4.0241, 4.0243, 4.0244),
    (10, 10): (4.4083, 4.4202, 4.4237, 4.4250, 4.4253, 4.4255),
}

# T17: 1-8-1 FG-core sandwich (C), straight; rows (L/h, bc) -> w_bar per p
_T17_PS = (0, 1, 2, 5, 10)
_T17 = {
    (5, "SS"): (3.9551, 6.7126, 8.0039, 9.0717, 9.4872),
    (5, "CC"): (1.0093, 1.6841, 2.0524, 2.5036, 2.7466),
    (5, "CF"): (36.216, 61.681, 73.175, 81.469, 84.148),
    (20, "SS"): (3.6697, 6.2602, 7.4029, 8.1531, 8.3571),
    (20, "CC"): (0.7476, 1.2706, 1.5044, 1.6693, 1.7210),
    (20, "CF"): (35.121, 59.948, 70.875, 77.958, 79.831),
}

# T18: 1-8-1 (C), straight, SS; p -> (sigma@L/h=5, tau@5, sigma@20, tau@20)
_T18 = {
    0: (4.4610, 0.7802, 17.6144, 0.7878),
    1: (6.0312, 0.7519, 23.7834, 0.7610),
    2: (6.5497, 0.6647, 25.7654, 0.6738),
    5: (6.9186, 0.5527, 27.0641, 0.5619),
    10: (7.2565, 0.6021, 28.3354, 0.6125),
}

# T19: 1-8-1 (C), curved, SS; w/tau/sigma blocks over R_COLS
_T19_W = {
    (5, 0): (3.9518, 3.9540, 3.9547, 3.9550, 3.9551, 3.9551),
    (5, 1): (6.7027, 6.7083, 6.7107, 6.7119, 6.7123, 6.7126),
    (5, 2): (7.9918, 7.9986, 7.9986, 8.0030, 8.0034, 8.0039),
    (5, 5): (9.0591, 9.0662, 9.0691, 9.0707, 9.0712, 9.0717),
    (5, 10): (9.4752, 9.4820, 9.4848, 9.4863, 9.4868, 9.4872),
    (10, 0): (3.7173, 3.7238, 3.7257, 3.7265, 3.7267, 3.7268),
    (10, 1): (6.3271, 6.3415, 6.3468, 6.3493, 6.3501, 6.3508),
    (10, 2): (7.4955, 7.5120, 7.5183, 7.5214, 7.5224, 7.5232),
    (10, 5): (8.3094, 8.3257, 8.3320, 8.3352, 8.3361, 8.3370),
    (10, 10): (8.5573, 8.5728, 8.5787, 8.5817, 8.5826, 8.5834),
}
_T19_TAU = {
    (5, 0): (0.7798, 0.7801, 0.7802, 0.7802, 0.7802, 0.7802),
    (5, 1): (0.7513, 0.7517, 0.7518, 0.7519, 0.7519, 0.7519),
    (5, 2): (0.6641, 0.6644, 0.6644, 0.6646, 0.6647, 0.6647),
    (5, 5): (0.5523, 0.5525, 0.5526, 0.5527, 0.5527, 0.5527),
    (5, 10): (0.6016, 0.6019, 0.6020, 0.6021, 0.6021, 0.6021),
    (10, 0): (0.7847, 0.7857, 0.7860, 0.7861, 0.7861, 0.7861),
    (10, 1): (0.7572, 0.7583, 0.7587, 0.7589, 0.7589, 0.7590),
    (10, 2): (0.6702, 0.6711, 0.6715, 0.6716, 0.6717, 0.6717),
    (10, 5): (0.5586, 0.5593, 0.5596, 0.5597, 0.5597, 0.5597),
    (10, 10): (0.6089, 0.6096, 0.6098, 0.6099, 0.6100, 0.6100),
}
_T19_SIG = {
    (5, 0): (4.4619, 4.4620, 4.4617, 4.4613, 4.4612, 4.4610),
    (5, 1): (6.0229, 6.0277, 6.0296, 6.0306, 6.0309, 6.0312),
    (5, 2): (6.5393, 6.5451, 6.5451, 6.5489, 6.5493, 6.5497),
    (5, 5): (6.9094, 6.9146, 6.9167, 6.9179, 6.9182, 6.9186),
    (5, 10): (7.2492, 7.2534, 7.2551, 7.2560, 7.2562, 7.2565),
    (10, 0): (8.8254, 8.8320, 8.8321, 8.8312, 8.8307, 8.8301),
    (10, 1): (11.8842, 11.9099, 11.9191, 11.9235, 11.9247, 11.9258),
    (10, 2): (12.8768, 12.9061, 12.9172, 12.9228, 12.9245, 12.9260),
    (10, 5): (13.5499, 13.5757, 13.5854, 13.5903, 13.5917, 13.5931),
    (10, 10): (14.2012, 14.2232, 14.2310, 14.2347, 14.2358, 14.2368),
}

# T3-T5 deflection convergence histories (pattern fixtures, never compared
# in absolute terms; geometry of the originating study is not recoverable).
# table -> layup label -> list of (ne, values for p = 0, 0.5, 1, 5, 10)
CONVERGENCE_TABLES = {
    "T3": {  # SS
        "A": [(2, (84.287, 127.90, 163.23, 247.17, 276.94)),
              (4, (84.288, 129.24, 167.14, 255.11, 282.26)),
              (8, (84.288, 129.57, 168.12, 257.10, 283.58)),
              (12, (84.288, 129.63, 168.30, 257.44, 283.83)),
              (16, (84.288, 129.66, 168.37, 257.60, 283.92)),
              (24, (84.288, 129.67, 168.41, 257.69, 283.98)),
              (32, (84.288, 129.68, 168.43, 257.72, 284.00))],
        "B 3-4-3": [(ne, (84.288, 126.61, 162.00, 281.10, 314.71))
                    for ne in (2, 4, 8, 12, 16, 24, 32)],
        "C 3-4-3": [(2, (159.79, 182.16, 197.28, 213.89, 213.89)),
                    (4, (164.38, 190.01, 204.04, 226.52, 228.81)),
                    (8, (165.53, 191.98, 206.48, 229.68, 231.99)),
                    (12, (165.74, 192.34, 206.93, 230.27, 232.58)),
                    (16, (165.81, 192.47, 207.09, 230.47, 232.79)),
                    (24, (165.87, 192.56, 207.20, 230.62, 232.94)),
                    (32, (165.90, 192.59, 207.24, 230.67, 232.99))],
    },
    "T4": {  # CC
        "A": [(2, (16.147, 23.604, 27.777, 39.414, 47.819)),
              (4, (17.983, 27.016, 34.287, 53.151, 60.267)),
              (8, (18.201, 27.645, 35.634, 55.958, 62.606)),
              (12, (18.295, 27.834, 35.974, 56.678, 63.286)),
              (16, (18.343, 27.920, 36.118, 56.983, 63.589)),
              (24, (18.389, 28.000, 36.240, 57.243, 63.857)),
              (32, (18.410, 28.038, 36.292, 57.352, 63.973))],
        "B 3-4-3": [(2, (16.447, 24.865, 31.910, 55.658, 62.363)),
                    (4, (17.983, 26.582, 33.745, 57.767, 64.536)),
                    (8, (18.201, 26.826, 34.007, 58.067, 64.846)),
                    (12, (18.296, 26.931, 34.120, 58.198, 64.980)),
                    (16, (18.343, 26.985, 34.178, 58.264, 65.048)),
                    (24, (18.389, 27.037, 34.234, 58.330, 65.116)),
                    (32, (18.410, 27.062, 34.261, 58.361, 65.148))],
        "C 3-4-3": [(2, (26.582, 27.466, 27.777, 28.312, 28.543)),
                    (4, (32.966, 37.521, 40.050, 44.646, 45.403)),
                    (8, (34.368, 39.797, 42.847, 48.329, 49.170)),
                    (12, (34.691, 40.296, 43.452, 49.140, 50.011)),
                    (16, (34.821, 40.491, 43.688, 49.457, 50.343)),
                    (24, (34.930, 40.648, 43.876, 49.712, 50.610)),
                    (32, (34.973, 40.711, 43.951, 49.813, 50.717))],
    },
    "T5": {  # CF
        "A": [(2, (13.509, 20.692, 26.730, 40.800, 45.199)),
              (4, (13.538, 20.798, 26.975, 41.306, 45.598)),
              (8, (13.552, 20.834, 27.048, 41.459, 45.730)),
              (12, (13.557, 20.843, 27.065, 41.494, 45.763)),
              (16, (13.559, 20.848, 27.072, 41.508, 45.777)),
              (24, (13.561, 20.851, 27.077, 41.520, 45.789)),
              (32, (13.562, 20.852, 27.079, 41.524, 45.793))],
        "B 3-4-3": [(2, (13.509, 20.285, 25.948, 45.008, 50.387)),
                    (4, (13.538, 20.317, 25.982, 45.048, 50.428)),
                    (8, (13.552, 20.333, 26.000, 45.068, 50.449)),
                    (12, (13.557, 20.338, 26.005, 45.075, 50.455)),
                    (16, (13.560, 20.341, 26.008, 45.078, 50.459)),
                    (24, (13.561, 20.343, 26.011, 45.081, 50.462)),
                    (32, (13.562, 20.344, 26.012, 45.082, 50.463))],
    },
}


def _build_cells() -> list[BenchmarkCell]:
    cells: list[BenchmarkCell] = []
    A = LayupKind.A
    B = LayupKind.B
    C = LayupKind.C
    n0 = (0.0, 0.0, 0.0)

    def add(table, row, col, quantity, kind, scheme, p, lh, rl, bc, expected,
            tol, suspect=None):
        cells.append(BenchmarkCell(table, row, col, quantity, kind, scheme,
                                   float(p), float(lh), rl, bc, expected, tol,
                                   suspect))

    for (lh, p), (w, s, t) in _T6.items():
        row = f"L/h={lh},p={p}"
        add("T6", row, "w_bar", "w_bar", A, n0, p, lh, INF, "SS", w, TOL_STRAIGHT)
        add("T6", row, "sigma_bar", "sigma_bar", A, n0, p, lh, INF, "SS", s, TOL_STRAIGHT)
        add("T6", row, "tau_bar", "tau_bar", A, n0, p, lh, INF, "SS", t, TOL_STRAIGHT)

    for (lh, p), vals in _T7.items():
        for rl, v in zip(R_COLS, vals):
            add("T7", f"L/h={lh},p={p}", _rl_label(rl), "w_bar", A, n0, p, lh,
                rl, "SS", v, TOL_CURVED, _T7_SUSPECT.get((lh, p, rl)))
    for (lh, p), vals in _T8_TAU.items():
        for rl, v in zip(R_COLS, vals):
            add("T8", f"L/h={lh},p={p}", _rl_label(rl), "tau_bar", A, n0, p, lh,
                rl, "SS", v, TOL_CURVED)
    for (lh, p), vals in _T8_SIG.items():
        for rl, v in zip(R_COLS, vals):
            add("T8", f"L/h={lh},p={p}", _rl_label(rl), "sigma_bar", A, n0, p, lh,
                rl, "SS", v, TOL_CURVED)

    for table, data, quantity in (("T9", _T9, "w_bar"), ("T10", _T10, "sigma_bar"),
                                  ("T11", _T11, "tau_bar")):
        for (lh, p), vals in data.items():
            for label, v in zip(_B_SCHEMES, vals):
                add(table, f"L/h={lh},p={p}", label, quantity, B,
                    _SCHEMES[label], p, lh, INF, "SS", v, TOL_STRAIGHT)

    for (lh, p), vals in _T12.items():
        for rl, v in zip(R_COLS, vals):
            add("T12", f"L/h={lh},p={p}", _rl_label(rl), "w_bar", B,
                _SCHEMES["1-1-1"], p, lh, rl, "SS", v, TOL_CURVED,
                _T12_SUSPECT.get((lh, p, rl)))

    for (bc, lh, p), vals in _T15.items():
        for rl, v in zip(R_COLS, vals):
            add("T15", f"{bc},L/h={lh},p={p}", _rl_label(rl), "w_bar", B,
                _SCHEMES["1-1-1"], p, lh, rl, bc, v, TOL_CURVED)

    for data, quantity in ((_T16_W, "w_bar"), (_T16_TAU, "tau_bar"),
                           (_T16_SIG, "sigma_bar")):
        for (lh, p), vals in data.items():
            for rl, v in zip(R_COLS, vals):
                add("T16", f"L/h={lh},p={p}", _rl_label(rl), quantity, B,
                    _SCHEMES["2-2-1"], p, lh, rl, "SS", v, TOL_CURVED)

    for (lh, bc), vals in _T17.items():
        for p, v in zip(_T17_PS, vals):
            add("T17", f"{bc},L/h={lh}", f"p={p}", "w_bar", C, _SCHEMES["1-8-1"],
                p, lh, INF, bc, v, TOL_STRAIGHT,
                _TYPEC_P0 if p == 0 else None)
    for p, (s5, t5, s20, t20) in _T18.items():
        sus = _TYPEC_P0 if p == 0 else None
        add("T18", f"p={p}", "sigma,L/h=5", "sigma_bar", C, _SCHEMES["1-8-1"],
            p, 5, INF, "SS", s5, TOL_STRAIGHT, sus)
        add("T18", f"p={p}", "tau,L/h=5", "tau_bar", C, _SCHEMES["1-8-1"],
            p, 5, INF, "SS", t5, TOL_STRAIGHT)
        add("T18", f"p={p}", "sigma,L/h=20", "sigma_bar", C, _SCHEMES["1-8-1"],
            p, 20, INF, "SS", s20, TOL_STRAIGHT, sus)
        add("T18", f"p={p}", "tau,L/h=20", "tau_bar", C, _SCHEMES["1-8-1"],
            p, 20, INF, "SS", t20, TOL_STRAIGHT)
    for data, quantity in ((_T19_W, "w_bar"), (_T19_TAU, "tau_bar"),
                           (_T19_SIG, "sigma_bar")):
        for (lh, p), vals in data.items():
            sus = _TYPEC_P0 if (p == 0 and quantity != "tau_bar") else None
            for rl, v in zip(R_COLS, vals):
                add("T19", f"L/h={lh},p={p}", _rl_label(rl), quantity, C,
                    _SCHEMES["1-8-1"], p, lh, rl, "SS", v, TOL_CURVED, sus)
    return cells


#: All fixture cells, in deterministic table order.
ALL_CELLS: tuple[BenchmarkCell, ...] = tuple(_build_cells())

TABLE_IDS = tuple(dict.fromkeys(c.table for c in ALL_CELLS))


@dataclass(frozen=True)
class BenchResult:
    """Outcome of one fixture cell comparison."""

    cell: BenchmarkCell
    computed: float
    rel_err: float
    passed: bool
    skipped: bool


@dataclass
class BenchReport:
    results: list[BenchResult] = field(default_factory=list)

    @property
    def n_pass(self) -> int:
        return sum(r.passed and not r.skipped for r in self.results)

    @property
    def n_fail(self) -> int:
        return sum((not r.passed) and not r.skipped for r in self.results)

    @property
    def n_skipped(self) -> int:
        return sum(r.skipped for r in self.results)

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def failures(self) -> list[BenchResult]:
        return [r for r in self.results if not r.passed and not r.skipped]

    def worst(self, n: int = 10) -> list[BenchResult]:
        gated = [r for r in self.results if not r.skipped]
        return sorted(gated, key=lambda r: -r.rel_err)[:n]


def benchmark_compare(tables: list[str] | None = None,
                      tol_overrides: dict[str, float] | None = None,
                      ne: int = 16) -> BenchReport:
    """Run every gated fixture cell and compare at its tolerance class.

    Cells sharing a physical configuration share one solve.  Suspect
    cells are still evaluated and reported, but marked skipped and
    never counted as failures.
    """
    from .studies import evaluate_case  # local import to avoid a cycle

    if tables is not None:
        unknown = set(tables) - set(TABLE_IDS)
        if unknown:
            raise ValueError(f"unknown benchmark table(s): {sorted(unknown)}")
    tol_overrides = tol_overrides or {}
    cache: dict[tuple, object] = {}
    report = BenchReport()
    for cell in ALL_CELLS:
        if tables is not None and cell.table not in tables:
            continue
        key = cell.case_key()
        if key not in cache:
            cache[key] = evaluate_case(cell.to_config(ne=ne))
        res = cache[key]
        computed = {"w_bar": res.w_bar, "sigma_bar": res.sigma_bar,
                    "tau_bar": res.tau_bar}[cell.quantity]
        rel = abs(computed - cell.expected) / abs(cell.expected)
        tol = tol_overrides.get(cell.table, cell.tol)
        report.results.append(BenchResult(
            cell=cell, computed=computed, rel_err=rel,
            passed=rel <= tol, skipped=cell.suspect is not None))
    return report
