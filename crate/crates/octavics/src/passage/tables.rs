//! Shipped passage-table data.
//!
//! Coefficients that are classically given as signed prime-power
//! products are stored that way (sign, list of `(base, exponent)` pairs) so
//! the data can be eyeball-checked factor by factor; the weight-20 table's
//! coefficients are plain `num/den` fractions. Exponent vectors list the
//! monomial powers of `(J2..J10)` (or `(I2..I10)` for the inverse-direction
//! reference table). Every table is checked for weighted homogeneity when
//! loaded, and the interpolation harness rederives all of this from scratch
//! in the test suite.

/// Coefficient as sign times a product of integer powers, with the monomial
/// exponent vector.
pub(super) type PowerProductTerm = (i8, &'static [(u32, i32)], [u8; 9]);

/// Coefficient as a decimal fraction, with the monomial exponent vector.
pub(super) type FractionTerm = (&'static str, &'static str, [u8; 9]);

/// Tsuyumine `I2` in Shioda monomials of weight 2.
#[rustfmt::skip]
pub(super) const I2_IN_J: &[PowerProductTerm] = &[
    (1, &[(2, 9), (3, 2), (5, 1), (7, 1)], [1, 0, 0, 0, 0, 0, 0, 0, 0]),
];

/// Tsuyumine `I3` in Shioda monomials of weight 3.
#[rustfmt::skip]
pub(super) const I3_IN_J: &[PowerProductTerm] = &[
    (1, &[(2, 10), (5, 2), (7, 3)], [0, 1, 0, 0, 0, 0, 0, 0, 0]),
];

/// Tsuyumine `I4` in Shioda monomials of weight 4.
#[rustfmt::skip]
pub(super) const I4_IN_J: &[PowerProductTerm] = &[
    (-1, &[(2, 14), (3, 1), (5, 2), (7, 1)], [2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 15), (3, 2), (7, 3)], [0, 0, 1, 0, 0, 0, 0, 0, 0]),
];

/// Tsuyumine `I5` in Shioda monomials of weight 5.
#[rustfmt::skip]
pub(super) const I5_IN_J: &[PowerProductTerm] = &[
    (1, &[(2, 14), (3, -1), (5, 3), (7, 3)], [1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 14), (3, 1), (5, 1), (7, 4)], [0, 0, 0, 1, 0, 0, 0, 0, 0]),
];

/// Tsuyumine `I6` in Shioda monomials of weight 6.
#[rustfmt::skip]
pub(super) const I6_IN_J: &[PowerProductTerm] = &[
    (1, &[(2, 15), (3, -1), (7, 1), (17, 3)], [3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 18), (3, 1), (7, 3), (17, 1)], [1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 16), (3, 2), (5, 1), (7, 4)], [0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 21), (3, 1), (7, 4)], [0, 0, 0, 0, 1, 0, 0, 0, 0]),
];

/// Tsuyumine `I7` in Shioda monomials of weight 7.
#[rustfmt::skip]
pub(super) const I7_IN_J: &[PowerProductTerm] = &[
    // The J2^2 J3 coefficient circulates without the 3^-1 factor;
    // interpolation on split octics (unique exact solution) and the
    // root-sum identity both require it. See `interpolate` tests.
    (1, &[(2, 16), (3, -1), (5, 4), (7, 3)], [2, 1, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 13), (3, 1), (5, 1), (7, 4), (17, 1)], [1, 0, 0, 1, 0, 0, 0, 0, 0]),
    (-1, &[(2, 14), (5, 1), (7, 5), (13, 1)], [0, 1, 1, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 15), (3, 2), (5, 1), (7, 5)], [0, 0, 0, 0, 0, 1, 0, 0, 0]),
];

/// Tsuyumine `I8` in Shioda monomials of weight 8.
#[rustfmt::skip]
pub(super) const I8_IN_J: &[PowerProductTerm] = &[
    (1, &[(2, 15), (3, -2), (7, 1), (17, 1), (6469, 1)], [4, 0, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 19), (5, 1), (7, 3), (43, 1)], [2, 0, 1, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 16), (3, -2), (5, 1), (7, 4), (233, 1)], [1, 2, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 21), (7, 4), (37, 1)], [1, 0, 0, 0, 1, 0, 0, 0, 0]),
    (1, &[(2, 18), (3, 2), (5, 1), (7, 5)], [0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (1, &[(2, 21), (3, 1), (7, 4)], [0, 0, 2, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 20), (3, 2), (5, 1), (7, 5)], [0, 0, 0, 0, 0, 0, 1, 0, 0]),
];

/// Tsuyumine `I9` in Shioda monomials of weight 9.
#[rustfmt::skip]
pub(super) const I9_IN_J: &[PowerProductTerm] = &[
    (-1, &[(2, 15), (3, -3), (7, 3), (134489, 1)], [3, 1, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 13), (7, 4), (17, 1), (613, 1)], [2, 0, 0, 1, 0, 0, 0, 0, 0]),
    (1, &[(2, 14), (3, -1), (5, 1), (7, 5), (1117, 1)], [1, 1, 1, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 15), (3, 1), (5, 2), (7, 5), (19, 1)], [1, 0, 0, 0, 0, 1, 0, 0, 0]),
    (-1, &[(2, 16), (3, 1), (5, 1), (7, 6)], [0, 3, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 21), (3, -1), (5, 2), (7, 6)], [0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (-1, &[(2, 23), (3, 2), (7, 6)], [0, 0, 0, 0, 0, 0, 0, 1, 0]),
];

/// Tsuyumine `I10` in Shioda monomials of weight 10.
#[rustfmt::skip]
pub(super) const I10_IN_J: &[PowerProductTerm] = &[
    (1, &[(2, 16), (3, -5), (7, 1), (17, 2), (223, 1), (227, 1)], [5, 0, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 21), (3, -3), (7, 3), (17, 1), (1097, 1)], [3, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 17), (3, -4), (5, 1), (7, 4), (37, 1), (991, 1)], [2, 2, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 22), (3, -3), (5, 2), (7, 4), (421, 1)], [2, 0, 0, 0, 1, 0, 0, 0, 0]),
    (-1, &[(2, 15), (3, 1), (5, 1), (7, 5), (17, 1), (29, 1)], [1, 1, 0, 1, 0, 0, 0, 0, 0]),
    (1, &[(2, 22), (3, -1), (7, 4), (23, 1), (31, 1)], [1, 0, 2, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, 25), (5, 1), (7, 5), (17, 1)], [1, 0, 0, 0, 0, 0, 1, 0, 0]),
    (1, &[(2, 16), (5, 1), (7, 6), (23, 1)], [0, 2, 1, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, 17), (3, 2), (5, 1), (7, 6), (29, 1)], [0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (1, &[(2, 25), (3, -1), (7, 5), (61, 1)], [0, 0, 1, 0, 1, 0, 0, 0, 0]),
    (1, &[(2, 26), (3, 1), (5, 1), (7, 6)], [0, 0, 0, 0, 0, 0, 0, 0, 1]),
];

pub(super) const I_IN_J: [&[PowerProductTerm]; 9] = [
    I2_IN_J, I3_IN_J, I4_IN_J, I5_IN_J, I6_IN_J, I7_IN_J, I8_IN_J, I9_IN_J, I10_IN_J,
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J2` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J2_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -9), (3, -2), (5, -1), (7, -1)], [1, 0, 0, 0, 0, 0, 0, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J3` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J3_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -10), (5, -2), (7, -3)], [0, 1, 0, 0, 0, 0, 0, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J4` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J4_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -19), (3, -5), (7, -4)], [2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -15), (3, -2), (7, -3)], [0, 0, 1, 0, 0, 0, 0, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J5` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J5_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -19), (3, -4), (5, -1), (7, -5)], [1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -14), (3, -1), (5, -1), (7, -4)], [0, 0, 0, 1, 0, 0, 0, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J6` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J6_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (-1, &[(2, -33), (3, -8), (5, -3), (7, -6), (11, 1), (17, 1)], [3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -27), (3, -4), (5, -1), (7, -5), (17, 1)], [1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -25), (3, 1), (5, -3), (7, -6)], [0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -21), (3, -1), (7, -4)], [0, 0, 0, 0, 1, 0, 0, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J7` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J7_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -29), (3, -7), (5, -1), (7, -7)], [2, 1, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -25), (3, -4), (5, -2), (7, -6), (17, 1)], [1, 0, 0, 1, 0, 0, 0, 0, 0]),
    (-1, &[(2, -26), (3, -4), (5, -2), (7, -6), (13, 1)], [0, 1, 1, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -15), (3, -2), (5, -1), (7, -5)], [0, 0, 0, 0, 0, 1, 0, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J8` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J8_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -39), (3, -8), (5, -5), (7, -9), (13, 2)], [4, 0, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -35), (3, -5), (5, -3), (7, 8), (59, 1)], [2, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -31), (3, -6), (5, -5), (7, -8), (83, 1)], [1, 2, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -29), (3, -5), (5, -2), (7, -6), (37, 1)], [1, 0, 0, 0, 1, 0, 0, 0, 0]),
    (1, &[(2, -26), (3, -1), (5, -3), (7, -7)], [0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (-1, &[(2, -29), (3, -5), (5, -1), (7, -7)], [0, 0, 2, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -20), (3, -2), (5, -1), (7, -5)], [0, 0, 0, 0, 0, 0, 1, 0, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J9` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J9_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (1, &[(2, -44), (3, -10), (5, -5), (7, -9), (11981, 1)], [3, 1, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -36), (3, -7), (5, -3), (7, -8), (17, 2)], [2, 0, 0, 1, 0, 0, 0, 0, 0]),
    (1, &[(2, -38), (3, -7), (5, -2), (7, -8), (31, 1)], [1, 1, 1, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -32), (3, -5), (7, -7), (19, 1)], [1, 0, 0, 0, 0, 1, 0, 0, 0]),
    (1, &[(2, -36), (3, -2), (5, -5), (7, -9), (11, 1)], [0, 3, 0, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -3), (3, -4), (7, -7)], [0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (-1, &[(2, -23), (3, -2), (7, -6)], [0, 0, 0, 0, 0, 0, 0, 1, 0]),
];

/// Reference row (transcribed verbatim, typos included) for Shioda `J10` in Tsuyumine monomials.
#[rustfmt::skip]
pub(super) const J10_IN_I_REFERENCE: &[PowerProductTerm] = &[
    (-1, &[(2, -49), (3, -11), (5, -6), (7, -11), (4177, 1)], [5, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -47), (3, -8), (5, -4), (7, -10), (1433, 1)], [3, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -41), (3, -9), (5, -6), (7, -11), (7927, 1)], [2, 2, 0, 0, 0, 0, 0, 0, 0]),
    (1, &[(2, -43), (3, -9), (5, -3), (7, -9), (11, 2), (1289, 1)], [2, 0, 0, 0, 1, 0, 0, 0, 0]),
    (-1, &[(2, -36), (3, -4), (5, -4), (7, -9), (17, 1)], [1, 1, 0, 1, 0, 0, 0, 0, 0]),
    (1, &[(2, -41), (3, -8), (5, -2), (7, -9), (149, 1)], [1, 0, 2, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -30), (3, -5), (5, -2), (7, -7), (17, 1)], [1, 0, 0, 0, 0, 0, 1, 0, 0]),
    (-1, &[(2, -39), (3, -3), (5, -4), (7, -10), (59, 1)], [0, 2, 1, 0, 0, 0, 0, 0, 0]),
    (-1, &[(2, -34), (3, -1), (5, -3), (7, -8), (29, 1)], [0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (1, &[(2, -37), (3, -5), (5, -1), (7, -8), (61, 1)], [0, 0, 1, 0, 1, 0, 0, 0, 0]),
    (1, &[(2, -26), (3, -1), (5, -1), (7, -6)], [0, 0, 0, 0, 0, 0, 0, 0, 1]),
];

pub(super) const J_IN_I_REFERENCE: [&[PowerProductTerm]; 9] = [
    J2_IN_I_REFERENCE,
    J3_IN_I_REFERENCE,
    J4_IN_I_REFERENCE,
    J5_IN_I_REFERENCE,
    J6_IN_I_REFERENCE,
    J7_IN_I_REFERENCE,
    J8_IN_I_REFERENCE,
    J9_IN_I_REFERENCE,
    J10_IN_I_REFERENCE,
];

/// The 102-term weight-20 expansion of `I20` in Shioda monomials.
#[rustfmt::skip]
pub(super) const I20_IN_J: &[FractionTerm] = &[
    ("-150779522189317809337532416", "996451875", [10, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("291770089409212849667964928", "22143375", [8, 0, 1, 0, 0, 0, 0, 0, 0]),
    ("-1695148271975113591309205504", "66430125", [7, 2, 0, 0, 0, 0, 0, 0, 0]),
    ("-179316648534237315000696832", "492075", [7, 0, 0, 0, 1, 0, 0, 0, 0]),
    ("652065191519301124910743552", "2460375", [6, 1, 0, 1, 0, 0, 0, 0, 0]),
    ("16154791364442376858763264", "2460375", [6, 0, 2, 0, 0, 0, 0, 0, 0]),
    ("109442295325339074758180864", "32805", [6, 0, 0, 0, 0, 0, 1, 0, 0]),
    ("-257864348790628803521019904", "492075", [5, 2, 1, 0, 0, 0, 0, 0, 0]),
    ("2325823006493876640808960", "6561", [5, 1, 0, 0, 0, 1, 0, 0, 0]),
    ("323685458436375462012780544", "19683", [5, 0, 1, 0, 1, 0, 0, 0, 0]),
    ("-36876419546721924702797824", "91125", [5, 0, 0, 2, 0, 0, 0, 0, 0]),
    ("-21490047395263280205266944", "729", [5, 0, 0, 0, 0, 0, 0, 0, 1]),
    ("-2273880863076868562712788992", "4428675", [4, 4, 0, 0, 0, 0, 0, 0, 0]),
    ("548968706200708073444605952", "295245", [4, 2, 0, 0, 1, 0, 0, 0, 0]),
    ("-415600353699987918363295744", "54675", [4, 1, 1, 1, 0, 0, 0, 0, 0]),
    ("48744958929083435954733056", "729", [4, 1, 0, 0, 0, 0, 0, 1, 0]),
    ("-1871598475608430889796632576", "91125", [4, 0, 3, 0, 0, 0, 0, 0, 0]),
    ("-1276593657056581174310207488", "3645", [4, 0, 1, 0, 0, 0, 1, 0, 0]),
    ("35303694973045127054884864", "1215", [4, 0, 0, 1, 0, 1, 0, 0, 0]),
    ("-14140368315298612206632960", "6561", [4, 0, 0, 0, 2, 0, 0, 0, 0]),
    ("1018515427675205805688225792", "164025", [3, 3, 0, 1, 0, 0, 0, 0, 0]),
    ("-336610288267269639778598912", "54675", [3, 2, 2, 0, 0, 0, 0, 0, 0]),
    ("-74969432406206948684333056", "2187", [3, 2, 0, 0, 0, 0, 1, 0, 0]),
    ("6649457326591889981308928", "45", [3, 1, 1, 0, 0, 1, 0, 0, 0]),
    ("-619030254390189753846726656", "10935", [3, 1, 0, 1, 1, 0, 0, 0, 0]),
    ("-3608451735885372384297877504", "10935", [3, 0, 2, 0, 1, 0, 0, 0, 0]),
    ("34814250412419307827888128", "405", [3, 0, 1, 2, 0, 0, 0, 0, 0]),
    ("-925614958438175247473573888", "1215", [3, 0, 1, 0, 0, 0, 0, 0, 1]),
    ("4710749291369895452213248", "135", [3, 0, 0, 1, 0, 0, 0, 1, 0]),
    ("-494819283286030519883530240", "729", [3, 0, 0, 0, 1, 0, 1, 0, 0]),
    ("14537770989836507807744", "1", [3, 0, 0, 0, 0, 2, 0, 0, 0]),
    ("-431154367844645937545740288", "98415", [2, 4, 1, 0, 0, 0, 0, 0, 0]),
    ("-19613507262065954888089600", "2187", [2, 3, 0, 0, 0, 1, 0, 0, 0]),
    ("-146707873700134638489436160", "729", [2, 2, 1, 0, 1, 0, 0, 0, 0]),
    ("48180602381764409738395648", "6075", [2, 2, 0, 2, 0, 0, 0, 0, 0]),
    ("40705853229537397508669440", "243", [2, 2, 0, 0, 0, 0, 0, 0, 1]),
    ("-1387066956958698274029568", "1215", [2, 1, 2, 1, 0, 0, 0, 0, 0]),
    ("-7435068187959987393265664", "81", [2, 1, 1, 0, 0, 0, 0, 1, 0]),
    ("36311983381615293444915200", "81", [2, 1, 0, 1, 0, 0, 1, 0, 0]),
    ("347874930144850910025613312", "729", [2, 1, 0, 0, 1, 1, 0, 0, 0]),
    ("1255008409772073192393801728", "6075", [2, 0, 4, 0, 0, 0, 0, 0, 0]),
    ("86331981484958040096505856", "27", [2, 0, 2, 0, 0, 0, 1, 0, 0]),
    ("-46372544865756833808121856", "135", [2, 0, 1, 1, 0, 1, 0, 0, 0]),
    ("-4872843022291903687675609088", "10935", [2, 0, 1, 0, 2, 0, 0, 0, 0]),
    ("273116722157213671548256256", "405", [2, 0, 0, 2, 1, 0, 0, 0, 0]),
    ("-639504861274391454026825728", "81", [2, 0, 0, 0, 1, 0, 0, 0, 1]),
    ("7611332353115259569963008", "9", [2, 0, 0, 0, 0, 1, 0, 1, 0]),
    ("-45986422419474003848593408", "32805", [1, 6, 0, 0, 0, 0, 0, 0, 0]),
    ("-1362337960585246054864125952", "19683", [1, 4, 0, 0, 1, 0, 0, 0, 0]),
    ("-31691914062729600254869504", "1215", [1, 3, 1, 1, 0, 0, 0, 0, 0]),
    ("6356506589402467076669440", "243", [1, 3, 0, 0, 0, 0, 0, 1, 0]),
    ("566267050476982096994762752", "6075", [1, 2, 3, 0, 0, 0, 0, 0, 0]),
    ("43732296667447222171860992", "81", [1, 2, 1, 0, 0, 0, 1, 0, 0]),
    ("3904625658485018957185024", "27", [1, 2, 0, 1, 0, 1, 0, 0, 0]),
    ("-1286370505156353475162931200", "6561", [1, 2, 0, 0, 2, 0, 0, 0, 0]),
    ("-5208687002242783664668672", "3", [1, 1, 2, 0, 0, 1, 0, 0, 0]),
    ("14323812823184402857066496", "27", [1, 1, 1, 1, 1, 0, 0, 0, 0]),
    ("-23793150319901049836535808", "225", [1, 1, 0, 3, 0, 0, 0, 0, 0]),
    ("-58820106293726805219082240", "27", [1, 1, 0, 1, 0, 0, 0, 0, 1]),
    ("446780612957806169881051136", "81", [1, 1, 0, 0, 1, 0, 0, 1, 0]),
    ("21094187031790256033628160", "27", [1, 1, 0, 0, 0, 1, 1, 0, 0]),
    ("2810488743488952870562168832", "6075", [1, 0, 3, 0, 1, 0, 0, 0, 0]),
    ("-40612648665960118006841344", "75", [1, 0, 2, 2, 0, 0, 0, 0, 0]),
    ("1899511296268009901110853632", "135", [1, 0, 2, 0, 0, 0, 0, 0, 1]),
    ("-219267176513018334369808384", "45", [1, 0, 1, 1, 0, 0, 0, 1, 0]),
    ("-1396117748045736738251866112", "81", [1, 0, 1, 0, 1, 0, 1, 0, 0]),
    ("2505606645422999207936000", "9", [1, 0, 1, 0, 0, 2, 0, 0, 0]),
    ("-11479503724865816564334592", "3", [1, 0, 0, 2, 0, 0, 1, 0, 0]),
    ("118276542650689432441585664", "27", [1, 0, 0, 1, 1, 1, 0, 0, 0]),
    ("-5919291988926361071008088064", "2187", [1, 0, 0, 0, 3, 0, 0, 0, 0]),
    ("22888858956213483842043904", "3", [1, 0, 0, 0, 0, 0, 0, 2, 0]),
    ("-7426491921950305668825088", "1215", [0, 5, 0, 1, 0, 0, 0, 0, 0]),
    ("43658225372385848292540416", "10935", [0, 4, 2, 0, 0, 0, 0, 0, 0]),
    ("-3676086792284031502254080", "81", [0, 4, 0, 0, 0, 0, 1, 0, 0]),
    ("13964097972615215174385664", "243", [0, 3, 1, 0, 0, 1, 0, 0, 0]),
    ("4729944765365651511443456", "27", [0, 3, 0, 1, 1, 0, 0, 0, 0]),
    ("-326349873401360496115843072", "729", [0, 2, 2, 0, 1, 0, 0, 0, 0]),
    ("8284834323872744942338048", "135", [0, 2, 1, 2, 0, 0, 0, 0, 0]),
    ("38610817879262287831760896", "81", [0, 2, 1, 0, 0, 0, 0, 0, 1]),
    ("36142134430859893179154432", "27", [0, 2, 0, 1, 0, 0, 0, 1, 0]),
    ("-319373012455443877561630720", "243", [0, 2, 0, 0, 1, 0, 1, 0, 0]),
    ("5094152176839330837299200", "27", [0, 2, 0, 0, 0, 2, 0, 0, 0]),
    ("-202070939385898091820351488", "675", [0, 1, 3, 1, 0, 0, 0, 0, 0]),
    ("-263370259894608708776230912", "135", [0, 1, 2, 0, 0, 0, 0, 1, 0]),
    ("-45560138686768979218792448", "9", [0, 1, 1, 1, 0, 0, 1, 0, 0]),
    ("176182578405149234752913408", "81", [0, 1, 1, 0, 1, 1, 0, 0, 0]),
    ("6425958693517651685146624", "3", [0, 1, 0, 2, 0, 1, 0, 0, 0]),
    ("-5585246833065391336456192", "9", [0, 1, 0, 1, 2, 0, 0, 0, 0]),
    ("-8522447483696509941186560", "9", [0, 1, 0, 0, 0, 1, 0, 0, 1]),
    ("143846738599820378507313152", "625", [0, 0, 5, 0, 0, 0, 0, 0, 0]),
    ("450198288326268137643180032", "45", [0, 0, 3, 0, 0, 0, 1, 0, 0]),
    ("-48017713874938717785817088", "15", [0, 0, 2, 1, 0, 1, 0, 0, 0]),
    ("-179304344085561207987109888", "405", [0, 0, 2, 0, 2, 0, 0, 0, 0]),
    ("35010518636149680570892288", "45", [0, 0, 1, 2, 1, 0, 0, 0, 0]),
    ("-510546782523321128191000576", "27", [0, 0, 1, 0, 1, 0, 0, 0, 1]),
    ("9321426935293057748172800", "3", [0, 0, 1, 0, 0, 1, 0, 1, 0]),
    ("20553746392321192334721024", "25", [0, 0, 0, 4, 0, 0, 0, 0, 0]),
    ("-8309386296604097192656896", "1", [0, 0, 0, 2, 0, 0, 0, 0, 1]),
    ("3200265993877873120772096", "3", [0, 0, 0, 1, 1, 0, 0, 1, 0]),
    ("-2979527538245459530219520", "1", [0, 0, 0, 1, 0, 1, 1, 0, 0]),
    ("176058111538199840570736640", "81", [0, 0, 0, 0, 2, 0, 1, 0, 0]),
    ("16305703093807098101760", "1", [0, 0, 0, 0, 1, 2, 0, 0, 0]),
];
