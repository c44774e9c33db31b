//! Published reference values.
#![allow(dead_code)]

/// `t(m, s)` for `1 <= m <= 12`; row `s` lists columns `m = 1..=12`.
pub const T_MS: [[u64; 12]; 7] = [
    [
        1, 2, 6, 24, 116, 642, 3938, 26194, 186042, 1395008, 10948768, 89346128,
    ],
    [
        0, 0, 0, 1, 12, 114, 1028, 9220, 83540, 768916, 7200852, 68611560,
    ],
    [0, 0, 0, 0, 0, 2, 48, 770, 10502, 132210, 1593934, 18755516],
    [0, 0, 0, 0, 0, 0, 0, 10, 348, 7680, 137940, 2206972],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 104, 4020, 106338],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 20, 1571],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
];

pub const T_M: [&str; 28] = [
    "1",
    "2",
    "6",
    "25",
    "128",
    "758",
    "5014",
    "36194",
    "280433",
    "2303918",
    "19885534",
    "179028087",
    "1671644720",
    "16114138846",
    "159761516110",
    "1623972412726",
    "16880442523007",
    "179026930243822",
    "1933537655138482",
    "21231023519199575",
    "236674460790503286",
    "2675162663681345170",
    "30625903703241927542",
    "354767977792683552908",
    "4154708768196322925749",
    "49152046198035152483150",
    "587011110939295781585102",
    "7072674305834582713614923",
];

pub const K_N: [&str; 28] = [
    "0",
    "2",
    "4",
    "19",
    "85",
    "445",
    "2513",
    "15221",
    "97436",
    "653290",
    "4554620",
    "32833261",
    "243633947",
    "1854129607",
    "14428437881",
    "114522981916",
    "925229661343",
    "7594812038558",
    "63246031323436",
    "533614085123809",
    "4556201784167013",
    "39330233695303765",
    "342938769382591967",
    "3018115913779272617",
    "26790754504125156939",
    "239715620518047835311",
    "2160879323839557205915",
    "19614261422949114679816",
];

pub const T_MOD_2: [u8; 28] = [
    1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1,
];

pub fn t_ms(m: usize, s: usize) -> u64 {
    if s < T_MS.len() {
        T_MS[s][m - 1]
    } else {
        0
    }
}
