//! Published reference tables, embedded as data.

use num_bigint::BigInt;

use crate::families::{FamilyId, FamilyRow};
use crate::identities::{Branch, CubeSumRecord};

/// One row of the `n < 1000` solution table: `(a, b, n, branch, N, x, y)`.
pub type Table1Row = (i64, i64, i64, Branch, i64, i64, i64);

use Branch::{Minus as M, Plus as P};

/// Solutions with `0 < n < 1000` and `b < 0 < a < |b|`, by increasing `N`.
pub const TABLE1: [Table1Row; 31] = [
    (3, -8, 3, P, 91, 6, -5),
    (2, -7, 4, P, 189, 6, -3),
    (3, -8, 9, M, 1729, 12, 1),
    (10, -39, 18, P, 12691, 28, -21),
    (9, -38, 32, M, 68705, 41, -6),
    (10, -39, 36, M, 97309, 46, -3),
    (105, -194, 46, P, 201159, 151, -148),
    (32, -127, 58, P, 400491, 90, -69),
    (64, -243, 107, P, 2484755, 171, -136),
    (73, -258, 108, P, 2554741, 181, -150),
    (32, -103, 121, M, 3587409, 153, 18),
    (248, -481, 121, P, 3587409, 369, -360),
    (37, -192, 123, M, 3767491, 160, -69),
    (43, -168, 163, M, 8741691, 206, -5),
    (91, -360, 163, P, 8741691, 254, -197),
    (819, -1208, 197, P, 15407765, 1016, -1011),
    (57, -128, 235, M, 26122131, 292, 107),
    (184, -597, 235, P, 26122131, 419, -362),
    (77, -208, 301, M, 54814509, 378, 93),
    (120, -629, 393, P, 121861441, 513, -236),
    (120, -629, 411, M, 139361059, 531, -218),
    (393, -1178, 438, P, 168632191, 831, -740),
    (152, -793, 481, P, 223264809, 633, -312),
    (128, -511, 490, M, 236019771, 618, -21),
    (3225, -4274, 528, P, 295233841, 3753, -3746),
    (148, -687, 562, M, 355957875, 710, -125),
    (2258, -3367, 562, P, 355957875, 2820, -2805),
    (512, -1591, 607, P, 448404255, 1119, -984),
    (777, -1952, 633, P, 508476241, 1410, -1319),
    (190, -999, 640, M, 525518721, 830, -359),
    (442, -1767, 804, P, 1041378589, 1246, -963),
];

/// First twenty rows of each family: `(n, n+a, n+b, eta)`.
pub const TABLE2_FAMILY_ONE: [(i64, i64, i64, i64); 20] = [
    (3, 6, -5, 1),
    (46, 151, -148, 3),
    (197, 1016, -1011, 5),
    (528, 3753, -3746, 7),
    (1111, 10090, -10081, 9),
    (2018, 22331, -22320, 11),
    (3321, 43356, -43343, 13),
    (5092, 76621, -76606, 15),
    (7403, 126158, -126141, 17),
    (10326, 196575, -196556, 19),
    (13933, 293056, -293035, 21),
    (18296, 421361, -421338, 23),
    (23487, 587826, -587801, 25),
    (29578, 799363, -799336, 27),
    (36641, 1063460, -1063431, 29),
    (44748, 1388181, -1388150, 31),
    (53971, 1782166, -1782133, 33),
    (64382, 2254631, -2254596, 35),
    (76053, 2815368, -2815331, 37),
    (89056, 3474745, -3474706, 39),
];

pub const TABLE2_FAMILY_TWO: [(i64, i64, i64, i64); 20] = [
    (4, 6, -3, 3),
    (121, 369, -360, 9),
    (562, 2820, -2805, 15),
    (1543, 10815, -10794, 21),
    (3280, 29538, -29511, 27),
    (5989, 65901, -65868, 33),
    (9886, 128544, -128505, 39),
    (15187, 227835, -227790, 45),
    (22108, 375870, -375819, 51),
    (30865, 586473, -586416, 57),
    (41674, 875196, -875133, 63),
    (54751, 1259319, -1259250, 69),
    (70312, 1757850, -1757775, 75),
    (88573, 2391525, -2391444, 81),
    (109750, 3182808, -3182721, 87),
    (134059, 4155891, -4155798, 93),
    (161716, 5336694, -5336595, 99),
    (192937, 6752865, -6752760, 105),
    (227938, 8433780, -8433669, 111),
    (266935, 10410543, -10410426, 117),
];

pub fn table1_records() -> Vec<CubeSumRecord> {
    TABLE1
        .iter()
        .map(|&(a, b, n, root, sum, x, y)| CubeSumRecord {
            n: n.into(),
            a: a.into(),
            b: b.into(),
            sum: sum.into(),
            x: x.into(),
            y: y.into(),
            root: Some(root),
        })
        .collect()
}

pub fn table2(family: FamilyId) -> &'static [(i64, i64, i64, i64); 20] {
    match family {
        FamilyId::One => &TABLE2_FAMILY_ONE,
        FamilyId::Two => &TABLE2_FAMILY_TWO,
    }
}

/// Table 2 rows as [`FamilyRow`]s, with `N` and `beta` filled in from the row values.
pub fn table2_rows(family: FamilyId) -> Vec<FamilyRow> {
    table2(family)
        .iter()
        .zip(1u64..)
        .map(|(&(n, x, y, eta), i)| {
            let n = BigInt::from(n);
            let (x, y) = (BigInt::from(x), BigInt::from(y));
            FamilyRow {
                family,
                i,
                sum: &x * &x * &x + &y * &y * &y,
                beta: &x + &y,
                n,
                x,
                y,
                eta: eta.into(),
            }
        })
        .collect()
}
