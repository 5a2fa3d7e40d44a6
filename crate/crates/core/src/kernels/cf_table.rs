// Generated by tools/cf_table_mp.py. Do not edit by hand.

/// `(degree, [(pole_re, pole_im, residue_re, residue_im); degree])`
#[rustfmt::skip]
pub(crate) static CF_TABLE: &[(usize, &[(f64, f64, f64, f64)])] = &[
    (2, &[
        (0.5850515606551311, 1.185847251723677, 0.16915263361154162, -0.8098011115445217),
        (0.5850515606551311, -1.185847251723677, 0.16915263361154162, 0.8098011115445217),
    ]),
    (3, &[
        (0.1981697296161005, 2.410667766188531, 0.691122195041816, 0.043143728357214896),
        (1.3688034212107467, 0.0, -1.4837496454512307, 0.0),
        (0.1981697296161005, -2.410667766188531, 0.691122195041816, -0.043143728357214896),
    ]),
    (4, &[
        (-0.36783831439986264, 3.658133272063283, 0.07339241923416416, 0.45000491585378904),
        (1.5484005705393915, 1.1918258539276196, -0.061683522554959416, -1.9050594559798493),
        (1.5484005705393915, -1.1918258539276196, -0.061683522554959416, 1.9050594559798493),
        (-0.36783831439986264, -3.658133272063283, 0.07339241923416416, -0.45000491585378904),
    ]),
    (5, &[
        (-1.0395069762766809, 4.921388603221931, -0.23878812038726321, 0.10373892026621329),
        (1.440594773992828, 2.3969827787124234, 1.8723828149829398, -0.3782067899419109),
        (2.155414289432619, 0.0, -3.2718146221932707, 0.0),
        (1.440594773992828, -2.3969827787124234, 1.8723828149829398, 0.3782067899419109),
        (-1.0395069762766809, -4.921388603221931, -0.23878812038726321, -0.10373892026621329),
    ]),
    (6, &[
        (-1.7819882759207992, 6.196512467347569, -0.08358161715624952, -0.10642926074795049),
        (1.1585525717193166, 3.6147726008201193, 0.663006870527614, 1.4514129199029144),
        (2.4006029389330075, 1.193129308402292, -0.5790130040301605, -4.286888564581603),
        (2.4006029389330075, -1.193129308402292, -0.5790130040301605, 4.286888564581603),
        (1.1585525717193166, -3.6147726008201193, 0.663006870527614, -1.4514129199029144),
        (-1.7819882759207992, -6.196512467347569, -0.08358161715624952, 0.10642926074795049),
    ]),
    (7, &[
        (-2.575726131083259, 7.480977367602826, 0.03968046105324854, -0.052477615821721814),
        (0.7576085974251853, 4.843618480313467, -0.9026051607425126, 0.7400361476526269),
        (2.423196319445775, 2.393029298772205, 4.456669211432577, -1.5604498800610274),
        (2.941096892577772, 0.0, -7.187625680982015, 0.0),
        (2.423196319445775, -2.393029298772205, 4.456669211432577, 1.5604498800610274),
        (0.7576085974251853, -4.843618480313467, -0.9026051607425126, -0.7400361476526269),
        (-2.575726131083259, -7.480977367602826, 0.03968046105324854, 0.052477615821721814),
    ]),
    (8, &[
        (-3.408539501577154, 8.773034564444613, 0.028129757158198692, 0.011577384568384278),
        (0.269490987246265, 6.0820325927101395, -0.6325880536559649, -0.4439231026530502),
        (2.2922491477094993, 3.600771496074937, 2.4362407326605786, 3.716755640458719),
        (3.2209452449505678, 1.1936196054172876, -1.8317717104417042, -9.525608128944675),
        (3.2209452449505678, -1.1936196054172876, -1.8317717104417042, 9.525608128944675),
        (2.2922491477094993, -3.600771496074937, 2.4362407326605786, -3.716755640458719),
        (0.269490987246265, -6.0820325927101395, -0.6325880536559649, 0.4439231026530502),
        (-3.408539501577154, -8.773034564444613, 0.028129757158198692, -0.011577384568384278),
    ]),
    (9, &[
        (-4.27227734105016, 10.071413404284925, -0.0018222944328351916, 0.013400277242892888),
        (-0.28571636062432143, 7.32875795846089, 0.15496216628022225, -0.44758718028631256),
        (2.047795523605495, 4.816232265195582, -2.4638881246519087, 2.789685945927348),
        (3.3196836155980773, 2.391341566616074, 10.197195751420272, -4.561767934317585),
        (3.7264404424523745, 0.0, -15.772898225394322, 0.0),
        (3.3196836155980773, -2.391341566616074, 10.197195751420272, 4.561767934317585),
        (2.047795523605495, -4.816232265195582, -2.4638881246519087, -2.789685945927348),
        (-0.28571636062432143, -7.32875795846089, 0.15496216628022225, 0.44758718028631256),
        (-4.27227734105016, -10.071413404284925, -0.0018222944328351916, -0.013400277242892888),
    ]),
    (10, &[
        (-5.161191271764947, 11.375156252224778, -0.005784903859715048, 0.0006858507075779822),
        (-0.8944047014173541, 8.582756898773036, 0.2725869803482112, 0.01421172707150338),
        (1.715406015926698, 6.038934925576109, -2.5655849551724015, -1.2163857065160157),
        (3.2837528833704184, 3.594386772405083, 7.117165104820129, 8.819533159469232),
        (4.027732467649549, 1.1938560664708728, -4.818381991284942, -21.054597241476863),
        (4.027732467649549, -1.1938560664708728, -4.818381991284942, 21.054597241476863),
        (3.2837528833704184, -3.594386772405083, 7.117165104820129, -8.819533159469232),
        (1.715406015926698, -6.038934925576109, -2.5655849551724015, 1.2163857065160157),
        (-0.8944047014173541, -8.582756898773036, 0.2725869803482112, -0.01421172707150338),
        (-5.161191271764947, -11.375156252224778, -0.005784903859715048, -0.0006858507075779822),
    ]),
    (11, &[
        (-6.071061003368324, 12.683520454717263, -0.00088167237615362, -0.002280368111347577),
        (-1.5468803139955989, 9.843173296877191, 0.034047278891829354, 0.14565219396943277),
        (1.3125381205613225, 7.2683188400209, 0.3085128117225299, -1.9833753211898402),
        (3.1429903144692615, 4.803073247350763, -5.9835669562819485, 8.464457243827574),
        (4.176509341864806, 2.39046527863192, 22.940708036667232, -11.84985500338308),
        (4.5116223104764925, 0.0, -34.59763906373394, 0.0),
        (4.176509341864806, -2.39046527863192, 22.940708036667232, 11.84985500338308),
        (3.1429903144692615, -4.803073247350763, -5.9835669562819485, -8.464457243827574),
        (1.3125381205613225, -7.2683188400209, 0.3085128117225299, 1.9833753211898402),
        (-1.5468803139955989, -9.843173296877191, 0.034047278891829354, -0.14565219396943277),
        (-6.071061003368324, -12.683520454717263, -0.00088167237615362, 0.002280368111347577),
    ]),
    (12, &[
        (-6.998687908595893, 13.995916624979262, 0.0008184334992732076, -0.0005813535824245203),
        (-2.2359682461249557, 11.109296232707466, -0.06857149425031032, 0.03841908288659378),
        (0.8517070967201087, 8.503832825637502, 1.319411534077838, -0.18352358287099216),
        (2.9178685450832536, 6.017345924094156, -8.238255934264528, -2.796191262327414),
        (4.206124204321871, 3.590920758885602, 18.78597742158065, 20.237285126154955),
        (4.82749345216446, 1.1939879912233993, -11.79937995604386, -46.41163533369931),
        (4.82749345216446, -1.1939879912233993, -11.79937995604386, 46.41163533369931),
        (4.206124204321871, -3.590920758885602, 18.78597742158065, -20.237285126154955),
        (2.9178685450832536, -6.017345924094156, -8.238255934264528, 2.796191262327414),
        (0.8517070967201087, -8.503832825637502, 1.319411534077838, 0.18352358287099216),
        (-2.2359682461249557, -11.109296232707466, -0.06857149425031032, -0.03841908288659378),
        (-6.998687908595893, -13.995916624979262, 0.0008184334992732076, 0.0005813535824245203),
    ]),
    (13, &[
        (-7.941584223751641, 15.311867991178543, 0.00030770539329344883, 0.00026269393788786176),
        (-2.9561938216968002, 12.380530211015124, -0.028327816379368077, -0.028043097521028692),
        (0.3422276404276667, 9.744966879751862, 0.35143916521676327, 0.7609929379167542),
        (2.623128528450508, 7.236992299554541, 0.2155785417980527, -6.7885062085871795),
        (4.139546835141408, 4.795667068660499, -13.7660873421044, 23.10895756036907),
        (5.0116980787825876, 2.3899519823815507, 51.16359283603643, -29.083358831422952),
        (5.296714480229448, 0.0, -75.87300618116964, 0.0),
        (5.0116980787825876, -2.3899519823815507, 51.16359283603643, 29.083358831422952),
        (4.139546835141408, -4.795667068660499, -13.7660873421044, -23.10895756036907),
        (2.623128528450508, -7.236992299554541, 0.2155785417980527, 6.7885062085871795),
        (0.3422276404276667, -9.744966879751862, 0.35143916521676327, -0.7609929379167542),
        (-2.9561938216968002, -12.380530211015124, -0.028327816379368077, 0.028043097521028692),
        (-7.941584223751641, -15.311867991178543, 0.00030770539329344883, -0.00026269393788786176),
    ]),
    (14, &[
        (-8.897773186468662, 16.630982619902316, -7.154288063593645e-05, 0.0001436104334954309),
        (-3.703275049423281, 13.656371871483397, 0.0094390253107397, -0.017184791958484803),
        (-0.20875863824999713, 10.991260561901344, -0.37636003878234425, 0.33518347029451867),
        (2.269783829231225, 8.461737973040277, 4.80711209883312, -1.3209793837427963),
        (3.9933697105786674, 6.004831642235073, -23.498232091084933, -5.808359129715501),
        (5.089345060580715, 3.588824029027027, 46.93327448883504, 45.6436497688329),
        (5.623142572746064, 1.1940690463439736, -27.8751619401477, -102.14733999057414),
        (5.623142572746064, -1.1940690463439736, -27.8751619401477, 102.14733999057414),
        (5.089345060580715, -3.588824029027027, 46.93327448883504, -45.6436497688329),
        (3.9933697105786674, -6.004831642235073, -23.498232091084933, 5.808359129715501),
        (2.269783829231225, -8.461737973040277, 4.80711209883312, 1.3209793837427963),
        (-0.20875863824999713, -10.991260561901344, -0.37636003878234425, -0.33518347029451867),
        (-3.703275049423281, -13.656371871483397, 0.0094390253107397, 0.017184791958484803),
        (-8.897773186468662, -16.630982619902316, -7.154288063593645e-05, -0.0001436104334954309),
    ]),
    (15, &[
        (-9.865655481467911, 17.952933852339232, -6.122664124472882e-05, -1.367020570274731e-05),
        (-4.473793268825349, 14.936391977842673, 0.009152096770577588, 0.0021051371454954603),
        (-0.7956423718720592, 12.242302351525723, -0.2485673139684203, -0.15191865467760288),
        (1.866307664275901, 9.691291108271884, 1.8742180382321216, 2.92008091020399),
        (3.7800254040924006, 7.218380899778773, -1.2019829126990034, -20.31135193815069),
        (5.078618543722517, 4.7910656182060105, -30.78529179818181, 59.389767029387585),
        (5.833760820653444, 2.389625482128705, 113.53763362789472, -69.12824885068294),
        (6.081751716479711, 0.0, -166.3702010228358, 0.0),
        (5.833760820653444, -2.389625482128705, 113.53763362789472, 69.12824885068294),
        (5.078618543722517, -4.7910656182060105, -30.78529179818181, -59.389767029387585),
        (3.7800254040924006, -7.218380899778773, -1.2019829126990034, 20.31135193815069),
        (1.866307664275901, -9.691291108271884, 1.8742180382321216, -2.92008091020399),
        (-0.7956423718720592, -12.242302351525723, -0.2485673139684203, 0.15191865467760288),
        (-4.473793268825349, -14.936391977842673, 0.009152096770577588, -0.0021051371454954603),
        (-9.865655481467911, -17.952933852339232, -6.122664124472882e-05, 1.367020570274731e-05),
    ]),
    (16, &[
        (-10.843917078695654, 19.27744616718121, -5.090152186615371e-07, -2.4220017652877375e-05),
        (-5.264971343442207, 16.22022147316785, 0.00021151742182520545, 0.004389296964739718),
        (-1.413928462488652, 13.497725698892689, 0.0410231368354073, -0.15743466173459056),
        (1.4193758971858133, 10.92536348449668, -1.479300711355903, 1.7686588323786054),
        (3.509103608415018, 8.436198985884344, 15.059585270024606, -5.7514052776432765),
        (4.993174737718069, 5.996881713603921, -62.518392463212315, -11.19039109428232),
        (5.948152268951234, 3.58745736201831, 113.39775178484675, 101.94721704216208),
        (6.416177699099483, 1.1941223933701346, -64.50087802554373, -224.59440762653085),
        (6.416177699099483, -1.1941223933701346, -64.50087802554373, 224.59440762653085),
        (5.948152268951234, -3.58745736201831, 113.39775178484675, -101.94721704216208),
        (4.993174737718069, -5.996881713603921, -62.518392463212315, 11.19039109428232),
        (3.509103608415018, -8.436198985884344, 15.059585270024606, 5.7514052776432765),
        (1.4193758971858133, -10.92536348449668, -1.479300711355903, -1.7686588323786054),
        (-1.413928462488652, -13.497725698892689, 0.0410231368354073, 0.15743466173459056),
        (-5.264971343442207, -16.22022147316785, 0.00021151742182520545, -0.004389296964739718),
        (-10.843917078695654, -19.27744616718121, -5.090152186615371e-07, 2.4220017652877375e-05),
    ]),
];
