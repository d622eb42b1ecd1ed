//! Coefficient tables for the built-in genus free energies.
//!
//! Each raw term is `(numerator, denominator, &[(jet index, exponent)])`;
//! index 1 is the only one allowed a negative exponent.

pub(super) type RawTerm = (i64, i64, &'static [(u8, i8)]);

pub(super) static H2_TERMS: &[RawTerm] = &[
    (1, 360, &[(1, -4), (2, 3)]),
    (-7, 1920, &[(1, -3), (2, 1), (3, 1)]),
    (11, 3840, &[(1, -2), (2, 2)]),
    (1, 1152, &[(1, -2), (4, 1)]),
    (-1, 320, &[(1, -1), (3, 1)]),
    (-1, 11520, &[(1, 2)]),
    (7, 2560, &[(2, 1)]),
];

pub(super) static F2_TERMS: &[RawTerm] = &[
    (1, 90, &[(1, -4), (2, 3)]),
    (-7, 480, &[(1, -3), (2, 1), (3, 1)]),
    (1, 960, &[(1, -2), (2, 2)]),
    (1, 288, &[(1, -2), (4, 1)]),
    (-1, 480, &[(1, -1), (3, 1)]),
    (-1, 2880, &[(1, 2)]),
    (-1, 480, &[(2, 1)]),
];

pub(super) static F3_TERMS: &[RawTerm] = &[
    (-5, 81, &[(1, -8), (2, 6)]),
    (59, 378, &[(1, -7), (2, 4), (3, 1)]),
    (-83, 896, &[(1, -6), (2, 2), (3, 2)]),
    (-83, 1890, &[(1, -6), (2, 3), (4, 1)]),
    (-13, 1890, &[(1, -6), (2, 5)]),
    (1273, 40320, &[(1, -5), (2, 1), (3, 1), (4, 1)]),
    (353, 40320, &[(1, -5), (2, 2), (5, 1)]),
    (1993, 120960, &[(1, -5), (2, 3), (3, 1)]),
    (59, 8064, &[(1, -5), (3, 3)]),
    (-17, 2240, &[(1, -4), (2, 1), (3, 2)]),
    (-7, 5760, &[(1, -4), (2, 1), (6, 1)]),
    (-211, 40320, &[(1, -4), (2, 2), (4, 1)]),
    (5, 5376, &[(1, -4), (2, 4)]),
    (-53, 20160, &[(1, -4), (3, 1), (5, 1)]),
    (-103, 60480, &[(1, -4), (4, 2)]),
    (1, 840, &[(1, -3), (2, 1), (5, 1)]),
    (-1, 576, &[(1, -3), (2, 2), (3, 1)]),
    (89, 40320, &[(1, -3), (3, 1), (4, 1)]),
    (1, 10368, &[(1, -3), (7, 1)]),
    (1, 2016, &[(1, -2), (2, 1), (4, 1)]),
    (-1, 9072, &[(1, -2), (2, 3)]),
    (1, 2688, &[(1, -2), (3, 2)]),
    (-1, 5760, &[(1, -2), (6, 1)]),
    (19, 120960, &[(1, -1), (2, 1), (3, 1)]),
    (-1, 13440, &[(1, -1), (5, 1)]),
    (1, 12096, &[(1, 1), (3, 1)]),
    (-1, 725760, &[(1, 4)]),
    (1, 24192, &[(2, 2)]),
    (13, 120960, &[(4, 1)]),
];

pub(super) static F4_TERMS: &[RawTerm] = &[
    (1852, 1215, &[(1, -12), (2, 9)]),
    (-772, 135, &[(1, -11), (2, 7), (3, 1)]),
    (14903, 2160, &[(1, -10), (2, 5), (3, 2)]),
    (9904, 6075, &[(1, -10), (2, 6), (4, 1)]),
    (151, 675, &[(1, -10), (2, 8)]),
    (-305129, 103680, &[(1, -9), (2, 3), (3, 3)]),
    (-101503, 32400, &[(1, -9), (2, 4), (3, 1), (4, 1)]),
    (-2243, 6480, &[(1, -9), (2, 5), (5, 1)]),
    (-2851, 3600, &[(1, -9), (2, 6), (3, 1)]),
    (22809, 71680, &[(1, -8), (2, 1), (3, 4)]),
    (13138507, 9676800, &[(1, -8), (2, 2), (3, 2), (4, 1)]),
    (415273, 829440, &[(1, -8), (2, 3), (3, 1), (5, 1)]),
    (1823, 5670, &[(1, -8), (2, 3), (4, 2)]),
    (195677, 230400, &[(1, -8), (2, 4), (3, 2)]),
    (12907, 226800, &[(1, -8), (2, 4), (6, 1)]),
    (2573, 10800, &[(1, -8), (2, 5), (4, 1)]),
    (-101, 12600, &[(1, -8), (2, 7)]),
    (-44201, 276480, &[(1, -7), (2, 1), (3, 1), (4, 2)]),
    (-12035, 96768, &[(1, -7), (2, 1), (3, 2), (5, 1)]),
    (-60941, 1075200, &[(1, -7), (2, 2), (3, 1), (6, 1)]),
    (-192983, 691200, &[(1, -7), (2, 2), (3, 3)]),
    (-171343, 1935360, &[(1, -7), (2, 2), (4, 1), (5, 1)]),
    (-812729, 2073600, &[(1, -7), (2, 3), (3, 1), (4, 1)]),
    (-212267, 29030400, &[(1, -7), (2, 3), (7, 1)]),
    (-22153, 414720, &[(1, -7), (2, 4), (5, 1)]),
    (70261, 3225600, &[(1, -7), (2, 5), (3, 1)]),
    (-2153, 28800, &[(1, -7), (3, 3), (4, 1)]),
    (20639, 4838400, &[(1, -6), (2, 1), (3, 1), (7, 1)]),
    (78533, 691200, &[(1, -6), (2, 1), (3, 2), (4, 1)]),
    (15179, 1935360, &[(1, -6), (2, 1), (4, 1), (6, 1)]),
    (9221, 1935360, &[(1, -6), (2, 1), (5, 2)]),
    (2143, 34560, &[(1, -6), (2, 2), (3, 1), (5, 1)]),
    (1379, 34560, &[(1, -6), (2, 2), (4, 2)]),
    (2323, 3225600, &[(1, -6), (2, 2), (8, 1)]),
    (-877, 57600, &[(1, -6), (2, 3), (3, 2)]),
    (26879, 2903040, &[(1, -6), (2, 3), (6, 1)]),
    (-10259, 1935360, &[(1, -6), (2, 4), (4, 1)]),
    (-1165, 1161216, &[(1, -6), (2, 6)]),
    (949, 55296, &[(1, -6), (3, 1), (4, 1), (5, 1)]),
    (59, 10752, &[(1, -6), (3, 2), (6, 1)]),
    (1549, 115200, &[(1, -6), (3, 4)]),
    (229, 62208, &[(1, -6), (4, 3)]),
    (-1751, 268800, &[(1, -5), (2, 1), (3, 1), (6, 1)]),
    (1747, 806400, &[(1, -5), (2, 1), (3, 3)]),
    (-1411, 138240, &[(1, -5), (2, 1), (4, 1), (5, 1)]),
    (-7, 138240, &[(1, -5), (2, 1), (9, 1)]),
    (2417, 537600, &[(1, -5), (2, 2), (3, 1), (4, 1)]),
    (-667, 537600, &[(1, -5), (2, 2), (7, 1)]),
    (97, 120960, &[(1, -5), (2, 3), (5, 1)]),
    (3197, 967680, &[(1, -5), (2, 4), (3, 1)]),
    (-1291, 138240, &[(1, -5), (3, 1), (4, 2)]),
    (-163, 967680, &[(1, -5), (3, 1), (8, 1)]),
    (-1001, 138240, &[(1, -5), (3, 2), (5, 1)]),
    (-2069, 5806080, &[(1, -5), (4, 1), (7, 1)]),
    (-197, 387072, &[(1, -5), (5, 1), (6, 1)]),
    (-419, 1935360, &[(1, -4), (2, 1), (3, 1), (5, 1)]),
    (-55, 387072, &[(1, -4), (2, 1), (4, 2)]),
    (37, 302400, &[(1, -4), (2, 1), (8, 1)]),
    (-2623, 967680, &[(1, -4), (2, 2), (3, 2)]),
    (-443, 9676800, &[(1, -4), (2, 2), (6, 1)]),
    (-5137, 4354560, &[(1, -4), (2, 3), (4, 1)]),
    (1, 7200, &[(1, -4), (2, 5)]),
    (1777, 4838400, &[(1, -4), (3, 1), (7, 1)]),
    (-709, 3225600, &[(1, -4), (3, 2), (4, 1)]),
    (73, 107520, &[(1, -4), (4, 1), (6, 1)]),
    (19, 46080, &[(1, -4), (5, 2)]),
    (1, 497664, &[(1, -4), (10, 1)]),
    (18713, 14515200, &[(1, -3), (2, 1), (3, 1), (4, 1)]),
    (-113, 9676800, &[(1, -3), (2, 1), (7, 1)]),
    (449, 1451520, &[(1, -3), (2, 2), (5, 1)]),
    (-49, 138240, &[(1, -3), (2, 3), (3, 1)]),
    (-89, 3225600, &[(1, -3), (3, 1), (6, 1)]),
    (937, 2903040, &[(1, -3), (3, 3)]),
    (-17, 387072, &[(1, -3), (4, 1), (5, 1)]),
    (-1, 138240, &[(1, -3), (9, 1)]),
    (7, 38400, &[(1, -2), (2, 1), (3, 2)]),
    (-923, 14515200, &[(1, -2), (2, 1), (6, 1)]),
    (17, 138240, &[(1, -2), (2, 2), (4, 1)]),
    (-239, 1451520, &[(1, -2), (3, 1), (5, 1)]),
    (-661, 5806080, &[(1, -2), (4, 2)]),
    (31, 9676800, &[(1, -2), (8, 1)]),
    (-11, 362880, &[(1, -1), (2, 1), (5, 1)]),
    (-137, 2073600, &[(1, -1), (3, 1), (4, 1)]),
    (143, 14515200, &[(1, -1), (7, 1)]),
    (17, 3225600, &[(1, 1), (2, 1), (3, 1)]),
    (-1, 138240, &[(1, 1), (5, 1)]),
    (1, 460800, &[(1, 2), (2, 2)]),
    (-19, 87091200, &[(1, 2), (4, 1)]),
    (1, 691200, &[(1, 3), (3, 1)]),
    (-1, 43545600, &[(1, 6)]),
    (-1, 86400, &[(2, 1), (4, 1)]),
    (1, 7257600, &[(2, 3)]),
    (-1, 115200, &[(3, 2)]),
    (-73, 29030400, &[(6, 1)]),
];

pub(super) static F5_TERMS: &[RawTerm] = &[
    (-109514, 1215, &[(1, -16), (2, 12)]),
    (181628, 405, &[(1, -15), (2, 10), (3, 1)]),
    (-1322159, 1620, &[(1, -14), (2, 8), (3, 2)]),
    (-93460, 729, &[(1, -14), (2, 9), (4, 1)]),
    (-1352, 81, &[(1, -14), (2, 11)]),
    (12916717, 19440, &[(1, -13), (2, 6), (3, 3)]),
    (391519, 972, &[(1, -13), (2, 7), (3, 1), (4, 1)]),
    (134599, 4860, &[(1, -13), (2, 8), (5, 1)]),
    (42691, 540, &[(1, -13), (2, 9), (3, 1)]),
    (-547560589, 2322432, &[(1, -12), (2, 4), (3, 4)]),
    (-14531719, 36288, &[(1, -12), (2, 5), (3, 2), (4, 1)]),
    (-5713573, 77760, &[(1, -12), (2, 6), (3, 1), (5, 1)]),
    (-12051881, 255150, &[(1, -12), (2, 6), (4, 2)]),
    (-1149739, 8640, &[(1, -12), (2, 7), (3, 2)]),
    (-161353, 34020, &[(1, -12), (2, 7), (6, 1)]),
    (-567199, 24300, &[(1, -12), (2, 8), (4, 1)]),
    (-2593, 9450, &[(1, -12), (2, 10)]),
    (419193, 14336, &[(1, -11), (2, 2), (3, 5)]),
    (8817996169, 63866880, &[(1, -11), (2, 3), (3, 3), (4, 1)]),
    (87822499, 1197504, &[(1, -11), (2, 4), (3, 1), (4, 2)]),
    (728671781, 12773376, &[(1, -11), (2, 4), (3, 2), (5, 1)]),
    (102985067, 9979200, &[(1, -11), (2, 5), (3, 1), (6, 1)]),
    (173831501, 1824768, &[(1, -11), (2, 5), (3, 3)]),
    (53761259, 3326400, &[(1, -11), (2, 5), (4, 1), (5, 1)]),
    (31781177, 475200, &[(1, -11), (2, 6), (3, 1), (4, 1)]),
    (8477461, 12830400, &[(1, -11), (2, 6), (7, 1)]),
    (2471441, 475200, &[(1, -11), (2, 7), (5, 1)]),
    (600763, 415800, &[(1, -11), (2, 8), (3, 1)]),
    (-18599541, 1576960, &[(1, -10), (2, 1), (3, 4), (4, 1)]),
    (-2912894597, 116121600, &[(1, -10), (2, 2), (3, 2), (4, 2)]),
    (-1661611993, 127733760, &[(1, -10), (2, 2), (3, 3), (5, 1)]),
    (-35338084651, 1916006400, &[(1, -10), (2, 3), (3, 1), (4, 1), (5, 1)]),
    (-626921467, 106444800, &[(1, -10), (2, 3), (3, 2), (6, 1)]),
    (-3430962641, 127733760, &[(1, -10), (2, 3), (3, 4)]),
    (-1848263, 467775, &[(1, -10), (2, 3), (4, 3)]),
    (-154991051, 136857600, &[(1, -10), (2, 4), (3, 1), (7, 1)]),
    (-1095679399, 19353600, &[(1, -10), (2, 4), (3, 2), (4, 1)]),
    (-5682077, 2721600, &[(1, -10), (2, 4), (4, 1), (6, 1)]),
    (-4872743377, 3832012800, &[(1, -10), (2, 4), (5, 2)]),
    (-1125727817, 91238400, &[(1, -10), (2, 5), (3, 1), (5, 1)]),
    (-19847231, 2494800, &[(1, -10), (2, 5), (4, 2)]),
    (-2268769, 29937600, &[(1, -10), (2, 5), (8, 1)]),
    (-1098923921, 425779200, &[(1, -10), (2, 6), (3, 2)]),
    (-27484783, 29937600, &[(1, -10), (2, 6), (6, 1)]),
    (-2825, 5544, &[(1, -10), (2, 7), (4, 1)]),
    (16091, 187110, &[(1, -10), (2, 9)]),
    (-4543, 8192, &[(1, -10), (3, 6)]),
    (274614007, 182476800, &[(1, -9), (2, 1), (3, 1), (4, 3)]),
    (1121508611, 319334400, &[(1, -9), (2, 1), (3, 2), (4, 1), (5, 1)]),
    (159183659, 212889600, &[(1, -9), (2, 1), (3, 3), (6, 1)]),
    (14367497, 7096320, &[(1, -9), (2, 1), (3, 5)]),
    (203383903, 127733760, &[(1, -9), (2, 2), (3, 1), (4, 1), (6, 1)]),
    (1238492531, 1277337600, &[(1, -9), (2, 2), (3, 1), (5, 2)]),
    (275874283, 638668800, &[(1, -9), (2, 2), (3, 2), (7, 1)]),
    (181880015, 12773376, &[(1, -9), (2, 2), (3, 3), (4, 1)]),
    (1591687897, 1277337600, &[(1, -9), (2, 2), (4, 2), (5, 1)]),
    (69761129, 6967296, &[(1, -9), (2, 3), (3, 1), (4, 2)]),
    (369691943, 3832012800, &[(1, -9), (2, 3), (3, 1), (8, 1)]),
    (2479931059, 319334400, &[(1, -9), (2, 3), (3, 2), (5, 1)]),
    (791123, 3870720, &[(1, -9), (2, 3), (4, 1), (7, 1)]),
    (25527371, 87091200, &[(1, -9), (2, 3), (5, 1), (6, 1)]),
    (1108533611, 638668800, &[(1, -9), (2, 4), (3, 1), (6, 1)]),
    (2322129119, 1277337600, &[(1, -9), (2, 4), (3, 3)]),
    (1046529431, 383201280, &[(1, -9), (2, 4), (4, 1), (5, 1)]),
    (1096859, 153280512, &[(1, -9), (2, 4), (9, 1)]),
    (276125491, 182476800, &[(1, -9), (2, 5), (3, 1), (4, 1)]),
    (84091529, 638668800, &[(1, -9), (2, 5), (7, 1)]),
    (515032871, 3832012800, &[(1, -9), (2, 6), (5, 1)]),
    (-999473, 2838528, &[(1, -9), (2, 7), (3, 1)]),
    (64482661, 60825600, &[(1, -9), (3, 3), (4, 2)]),
    (35113699, 85155840, &[(1, -9), (3, 4), (5, 1)]),
    (-28069627, 319334400, &[(1, -8), (2, 1), (3, 1), (4, 1), (7, 1)]),
    (-80480347, 638668800, &[(1, -8), (2, 1), (3, 1), (5, 1), (6, 1)]),
    (-454075417, 212889600, &[(1, -8), (2, 1), (3, 2), (4, 2)]),
    (-946477, 45619200, &[(1, -8), (2, 1), (3, 2), (8, 1)]),
    (-176093453, 159667200, &[(1, -8), (2, 1), (3, 3), (5, 1)]),
    (-1144789, 11612160, &[(1, -8), (2, 1), (4, 1), (5, 2)]),
    (-103432013, 1277337600, &[(1, -8), (2, 1), (4, 2), (6, 1)]),
    (-20664649, 8870400, &[(1, -8), (2, 2), (3, 1), (4, 1), (5, 1)]),
    (-328171, 53222400, &[(1, -8), (2, 2), (3, 1), (9, 1)]),
    (-9854357, 13305600, &[(1, -8), (2, 2), (3, 2), (6, 1)]),
    (-45787691, 106444800, &[(1, -8), (2, 2), (3, 4)]),
    (-18837199, 1277337600, &[(1, -8), (2, 2), (4, 1), (8, 1)]),
    (-13316641, 26611200, &[(1, -8), (2, 2), (4, 3)]),
    (-1293697, 53222400, &[(1, -8), (2, 2), (5, 1), (7, 1)]),
    (-6093371, 425779200, &[(1, -8), (2, 2), (6, 2)]),
    (-179669059, 958003200, &[(1, -8), (2, 3), (3, 1), (7, 1)]),
    (-764936639, 638668800, &[(1, -8), (2, 3), (3, 2), (4, 1)]),
    (-2883761, 8294400, &[(1, -8), (2, 3), (4, 1), (6, 1)]),
    (-406451147, 1916006400, &[(1, -8), (2, 3), (5, 2)]),
    (-573019, 1045094400, &[(1, -8), (2, 3), (10, 1)]),
    (-68301953, 212889600, &[(1, -8), (2, 4), (3, 1), (5, 1)]),
    (-133150489, 638668800, &[(1, -8), (2, 4), (4, 2)]),
    (-5935327, 383201280, &[(1, -8), (2, 4), (8, 1)]),
    (6013615, 12773376, &[(1, -8), (2, 5), (3, 2)]),
    (-5117003, 182476800, &[(1, -8), (2, 5), (6, 1)]),
    (4549471, 42577920, &[(1, -8), (2, 6), (4, 1)]),
    (-274289, 255467520, &[(1, -8), (2, 8)]),
    (-8134913, 45619200, &[(1, -8), (3, 1), (4, 2), (5, 1)]),
    (-336827, 2956800, &[(1, -8), (3, 2), (4, 1), (6, 1)]),
    (-22151509, 319334400, &[(1, -8), (3, 2), (5, 2)]),
    (-877403, 42577920, &[(1, -8), (3, 3), (7, 1)]),
    (-3980637, 7884800, &[(1, -8), (3, 4), (4, 1)]),
    (-653701, 34214400, &[(1, -8), (4, 4)]),
    (15535133, 91238400, &[(1, -7), (2, 1), (3, 1), (4, 1), (6, 1)]),
    (7368997, 70963200, &[(1, -7), (2, 1), (3, 1), (5, 2)]),
    (3929, 14515200, &[(1, -7), (2, 1), (3, 1), (10, 1)]),
    (916913, 19958400, &[(1, -7), (2, 1), (3, 2), (7, 1)]),
    (2872733, 13305600, &[(1, -7), (2, 1), (3, 3), (4, 1)]),
    (38377, 53222400, &[(1, -7), (2, 1), (4, 1), (9, 1)]),
    (85455011, 638668800, &[(1, -7), (2, 1), (4, 2), (5, 1)]),
    (122413, 91238400, &[(1, -7), (2, 1), (5, 1), (8, 1)]),
    (82861, 45619200, &[(1, -7), (2, 1), (6, 1), (7, 1)]),
    (1783923, 7884800, &[(1, -7), (2, 2), (3, 1), (4, 2)]),
    (289, 19008, &[(1, -7), (2, 2), (3, 1), (8, 1)]),
    (5302619, 30412800, &[(1, -7), (2, 2), (3, 2), (5, 1)]),
    (2069131, 63866880, &[(1, -7), (2, 2), (4, 1), (7, 1)]),
    (29758507, 638668800, &[(1, -7), (2, 2), (5, 1), (6, 1)]),
    (11437, 348364800, &[(1, -7), (2, 2), (11, 1)]),
    (16316161, 319334400, &[(1, -7), (2, 3), (3, 1), (6, 1)]),
    (-10864759, 47900160, &[(1, -7), (2, 3), (3, 3)]),
    (51887531, 638668800, &[(1, -7), (2, 3), (4, 1), (5, 1)]),
    (284539, 191600640, &[(1, -7), (2, 3), (9, 1)]),
    (-443511251, 1916006400, &[(1, -7), (2, 4), (3, 1), (4, 1)]),
    (1215667, 255467520, &[(1, -7), (2, 4), (7, 1)]),
    (-11532541, 479001600, &[(1, -7), (2, 5), (5, 1)]),
    (319877, 159667200, &[(1, -7), (2, 6), (3, 1)]),
    (1030877, 425779200, &[(1, -7), (3, 1), (4, 1), (8, 1)]),
    (275599, 3379200, &[(1, -7), (3, 1), (4, 3)]),
    (318517, 79833600, &[(1, -7), (3, 1), (5, 1), (7, 1)]),
    (66653, 28385280, &[(1, -7), (3, 1), (6, 2)]),
    (30303149, 159667200, &[(1, -7), (3, 2), (4, 1), (5, 1)]),
    (7697, 15206400, &[(1, -7), (3, 2), (9, 1)]),
    (570989, 14192640, &[(1, -7), (3, 3), (6, 1)]),
    (10673, 691200, &[(1, -7), (3, 5)]),
    (104281, 14192640, &[(1, -7), (4, 1), (5, 1), (6, 1)]),
    (155959, 60825600, &[(1, -7), (4, 2), (7, 1)]),
    (571213, 383201280, &[(1, -7), (5, 3)]),
    (-32913731, 638668800, &[(1, -6), (2, 1), (3, 1), (4, 1), (5, 1)]),
    (-13001, 15206400, &[(1, -6), (2, 1), (3, 1), (9, 1)]),
    (-864373, 53222400, &[(1, -6), (2, 1), (3, 2), (6, 1)]),
    (3625841, 127733760, &[(1, -6), (2, 1), (3, 4)]),
    (-16217, 7884800, &[(1, -6), (2, 1), (4, 1), (8, 1)]),
    (-1184501, 106444800, &[(1, -6), (2, 1), (4, 3)]),
    (-542981, 159667200, &[(1, -6), (2, 1), (5, 1), (7, 1)]),
    (-14227, 7096320, &[(1, -6), (2, 1), (6, 2)]),
    (-7, 4976640, &[(1, -6), (2, 1), (12, 1)]),
    (-1295627, 212889600, &[(1, -6), (2, 2), (3, 1), (7, 1)]),
    (73978651, 638668800, &[(1, -6), (2, 2), (3, 2), (4, 1)]),
    (-7277719, 638668800, &[(1, -6), (2, 2), (4, 1), (6, 1)]),
    (-742733, 106444800, &[(1, -6), (2, 2), (5, 2)]),
    (-19631, 174182400, &[(1, -6), (2, 2), (10, 1)]),
    (38370113, 958003200, &[(1, -6), (2, 3), (3, 1), (5, 1)]),
    (75292039, 2874009600, &[(1, -6), (2, 3), (4, 2)]),
    (-52781, 79833600, &[(1, -6), (2, 3), (8, 1)]),
    (1211, 2027520, &[(1, -6), (2, 4), (3, 2)]),
    (231617, 54743040, &[(1, -6), (2, 4), (6, 1)]),
    (10243, 239500800, &[(1, -6), (2, 5), (4, 1)]),
    (-151, 399168, &[(1, -6), (2, 7)]),
    (-659977, 106444800, &[(1, -6), (3, 1), (4, 1), (7, 1)]),
    (-1138241, 127733760, &[(1, -6), (3, 1), (5, 1), (6, 1)]),
    (-11, 1741824, &[(1, -6), (3, 1), (11, 1)]),
    (-10135361, 425779200, &[(1, -6), (3, 2), (4, 2)]),
    (-185851, 127733760, &[(1, -6), (3, 2), (8, 1)]),
    (-520931, 42577920, &[(1, -6), (3, 3), (5, 1)]),
    (-22349, 3193344, &[(1, -6), (4, 1), (5, 2)]),
    (-775, 41803776, &[(1, -6), (4, 1), (10, 1)]),
    (-244457, 42577920, &[(1, -6), (4, 2), (6, 1)]),
    (-701, 18247680, &[(1, -6), (5, 1), (9, 1)]),
    (-2143, 36495360, &[(1, -6), (6, 1), (8, 1)]),
    (-3697, 109486080, &[(1, -6), (7, 2)]),
    (-3705967, 239500800, &[(1, -5), (2, 1), (3, 1), (4, 2)]),
    (650429, 1277337600, &[(1, -5), (2, 1), (3, 1), (8, 1)]),
    (-1883363, 159667200, &[(1, -5), (2, 1), (3, 2), (5, 1)]),
    (698809, 638668800, &[(1, -5), (2, 1), (4, 1), (7, 1)]),
    (2867, 1814400, &[(1, -5), (2, 1), (5, 1), (6, 1)]),
    (1091, 174182400, &[(1, -5), (2, 1), (11, 1)]),
    (-317077, 63866880, &[(1, -5), (2, 2), (3, 1), (6, 1)]),
    (-998201, 638668800, &[(1, -5), (2, 2), (3, 3)]),
    (-5091301, 638668800, &[(1, -5), (2, 2), (4, 1), (5, 1)]),
    (3373, 45619200, &[(1, -5), (2, 2), (9, 1)]),
    (-1229917, 638668800, &[(1, -5), (2, 3), (3, 1), (4, 1)]),
    (-42149, 71850240, &[(1, -5), (2, 3), (7, 1)]),
    (-24971, 127733760, &[(1, -5), (2, 4), (5, 1)]),
    (28957, 21288960, &[(1, -5), (2, 5), (3, 1)]),
    (102911, 35481600, &[(1, -5), (3, 1), (4, 1), (6, 1)]),
    (2264879, 1277337600, &[(1, -5), (3, 1), (5, 2)]),
    (71, 2721600, &[(1, -5), (3, 1), (10, 1)]),
    (4717, 6082560, &[(1, -5), (3, 2), (7, 1)]),
    (-809239, 106444800, &[(1, -5), (3, 3), (4, 1)]),
    (44647, 638668800, &[(1, -5), (4, 1), (9, 1)]),
    (2932793, 1277337600, &[(1, -5), (4, 2), (5, 1)]),
    (31, 237600, &[(1, -5), (5, 1), (8, 1)]),
    (299, 1689600, &[(1, -5), (6, 1), (7, 1)]),
    (1, 29859840, &[(1, -5), (13, 1)]),
    (49661, 119750400, &[(1, -4), (2, 1), (3, 1), (7, 1)]),
    (20527, 14192640, &[(1, -4), (2, 1), (3, 2), (4, 1)]),
    (1516703, 1916006400, &[(1, -4), (2, 1), (4, 1), (6, 1)]),
    (927517, 1916006400, &[(1, -4), (2, 1), (5, 2)]),
    (-727, 116121600, &[(1, -4), (2, 1), (10, 1)]),
    (30953, 45619200, &[(1, -4), (2, 2), (3, 1), (5, 1)]),
    (50047, 106444800, &[(1, -4), (2, 2), (4, 2)]),
    (60127, 958003200, &[(1, -4), (2, 2), (8, 1)]),
    (-2141, 1520640, &[(1, -4), (2, 3), (3, 2)]),
    (6169, 76640256, &[(1, -4), (2, 3), (6, 1)]),
    (-29783, 63866880, &[(1, -4), (2, 4), (4, 1)]),
    (263, 23950080, &[(1, -4), (2, 6)]),
    (18211, 9580032, &[(1, -4), (3, 1), (4, 1), (5, 1)]),
    (-2533, 106444800, &[(1, -4), (3, 1), (9, 1)]),
    (62701, 106444800, &[(1, -4), (3, 2), (6, 1)]),
    (16649, 91238400, &[(1, -4), (3, 4)]),
    (-8189, 141926400, &[(1, -4), (4, 1), (8, 1)]),
    (800453, 1916006400, &[(1, -4), (4, 3)]),
    (-30553, 319334400, &[(1, -4), (5, 1), (7, 1)]),
    (-8017, 141926400, &[(1, -4), (6, 2)]),
    (-1, 4976640, &[(1, -4), (12, 1)]),
    (-10961, 79833600, &[(1, -3), (2, 1), (3, 1), (6, 1)]),
    (4721, 12773376, &[(1, -3), (2, 1), (3, 3)]),
    (-64907, 273715200, &[(1, -3), (2, 1), (4, 1), (5, 1)]),
    (-323, 68428800, &[(1, -3), (2, 1), (9, 1)]),
    (3337, 4561920, &[(1, -3), (2, 2), (3, 1), (4, 1)]),
    (-247, 11612160, &[(1, -3), (2, 2), (7, 1)]),
    (2279, 19160064, &[(1, -3), (2, 3), (5, 1)]),
    (-47, 1596672, &[(1, -3), (2, 4), (3, 1)]),
    (-13261, 54743040, &[(1, -3), (3, 1), (4, 2)]),
    (-17527, 958003200, &[(1, -3), (3, 1), (8, 1)]),
    (-10277, 58060800, &[(1, -3), (3, 2), (5, 1)]),
    (-931, 22809600, &[(1, -3), (4, 1), (7, 1)]),
    (-113089, 1916006400, &[(1, -3), (5, 1), (6, 1)]),
    (113, 348364800, &[(1, -3), (11, 1)]),
    (-26833, 212889600, &[(1, -2), (2, 1), (3, 1), (5, 1)]),
    (-5497, 63866880, &[(1, -2), (2, 1), (4, 2)]),
    (41, 9580032, &[(1, -2), (2, 1), (8, 1)]),
    (23669, 1277337600, &[(1, -2), (2, 2), (3, 2)]),
    (-223, 9123840, &[(1, -2), (2, 2), (6, 1)]),
    (1049, 119750400, &[(1, -2), (2, 3), (4, 1)]),
    (1, 633600, &[(1, -2), (2, 5)]),
    (29611, 1916006400, &[(1, -2), (3, 1), (7, 1)]),
    (-2099, 15966720, &[(1, -2), (3, 2), (4, 1)]),
    (20521, 638668800, &[(1, -2), (4, 1), (6, 1)]),
    (7003, 348364800, &[(1, -2), (5, 2)]),
    (13, 74649600, &[(1, -2), (10, 1)]),
    (-4801, 766402560, &[(1, -1), (2, 1), (3, 1), (4, 1)]),
    (373, 91238400, &[(1, -1), (2, 1), (7, 1)]),
    (-7753, 3832012800, &[(1, -1), (2, 2), (5, 1)]),
    (-767, 212889600, &[(1, -1), (2, 3), (3, 1)]),
    (8669, 638668800, &[(1, -1), (3, 1), (6, 1)]),
    (-5707, 3832012800, &[(1, -1), (3, 3)]),
    (1867, 79833600, &[(1, -1), (4, 1), (5, 1)]),
    (-361, 547430400, &[(1, -1), (9, 1)]),
    (-19, 13305600, &[(1, 1), (2, 1), (5, 1)]),
    (-5, 2128896, &[(1, 1), (2, 2), (3, 1)]),
    (-2011, 638668800, &[(1, 1), (3, 1), (4, 1)]),
    (6911, 11496038400, &[(1, 1), (7, 1)]),
    (-23, 15966720, &[(1, 2), (2, 1), (4, 1)]),
    (1, 3991680, &[(1, 2), (2, 3)]),
    (-23, 21288960, &[(1, 2), (3, 2)]),
    (13, 174182400, &[(1, 2), (6, 1)]),
    (17, 53222400, &[(1, 3), (2, 1), (3, 1)]),
    (-241, 958003200, &[(1, 3), (5, 1)]),
    (1, 6386688, &[(1, 4), (2, 2)]),
    (-1, 130636800, &[(1, 4), (4, 1)]),
    (1, 15966720, &[(1, 5), (3, 1)]),
    (-1, 1277337600, &[(1, 8)]),
    (-23, 21288960, &[(2, 1), (3, 2)]),
    (5833, 3832012800, &[(2, 1), (6, 1)]),
    (-19, 54743040, &[(2, 2), (4, 1)]),
    (-29, 127733760, &[(2, 4)]),
    (4643, 1916006400, &[(3, 1), (5, 1)]),
    (1217, 1149603840, &[(4, 2)]),
    (-79, 638668800, &[(8, 1)]),
];
