#pragma once

// Reference energy tables, transcribed verbatim (including cells that do not
// reproduce). Table 1 in hartree, tables 2 and 3 in eV.

#include <array>

namespace mrspec::testing {

struct AtomicRow {
  const char* state;
  double inv_b;
  // alpha = 0.75: present, QD, LS; alpha = 1.5: present, QD, LS. 0 = blank.
  std::array<double, 6> values;
};

struct MolecularRow {
  const char* state;
  double inv_b;
  // First molecule alpha = {0 or 1, 0.75, 1.5}, then second molecule.
  std::array<double, 6> values;
};

inline constexpr std::array<AtomicRow, 28> kTable1 = {{
    {"2p", 0.025, {-0.1205793, -0.1205793, -0.1205271, -0.0900228, -0.0900229, -0.0899708}},
    {"2p", 0.050, {-0.1084228, -0.1084228, -0.1082151, -0.0802472, -0.0802472, -0.0800400}},
    {"2p", 0.075, {-0.0969120, -0.0969120, -0.0964469, -0.0710332, -0.0710332, -0.0705701}},
    {"2p", 0.100, {-0.0860740, 0, 0, -0.0577157, 0, 0}},
    {"3p", 0.025, {-0.0459296, -0.0459297, -0.0458779, -0.0369650, -0.0369651, -0.0369134}},
    {"3p", 0.050, {-0.0352672, -0.0352672, -0.0350633, -0.0274719, -0.0274719, -0.0272696}},
    {"3p", 0.075, {-0.0260109, -0.0260110, -0.0255654, -0.0193850, -0.0193850, -0.0189474}},
    {"3p", 0.100, {-0.0181609, 0, 0, -0.0127043, 0, 0}},
    {"3d", 0.025, {-0.0449299, -0.0449299, -0.0447743, -0.0396344, -0.0396345, -0.0394789}},
    {"3d", 0.050, {-0.0343082, -0.0343082, -0.0336930, -0.0300629, -0.0300629, -0.0294496}},
    {"3d", 0.075, {-0.0251168, -0.0251168, -0.0237621, -0.0218120, -0.0218121, -0.0204663}},
    {"4p", 0.025, {-0.0208608, -0.0208608, -0.0208097, -0.0172249, -0.0172249, -0.0171740}},
    {"4p", 0.050, {-0.0119291, -0.0119292, -0.0117365, -0.0091019, -0.0091019, -0.0089134}},
    {"4p", 0.075, {-0.0054773, -0.0054773, -0.0050945, -0.0035478, -0.0035478, -0.0031884}},
    {"4d", 0.025, {-0.0204555, -0.0204555, -0.0203017, -0.0183649, -0.0183649, -0.0182115}},
    {"4d", 0.050, {-0.0115741, -0.0115742, -0.0109904, -0.0100947, -0.0100947, -0.0095167}},
    {"4d", 0.075, {-0.0052047, -0.0052047, -0.0040331, -0.0042808, -0.0042808, -0.0031399}},
    {"4f", 0.025, {-0.0202886, -0.0202887, -0.0199797, -0.0189222, -0.0189223, -0.0186137}},
    {"4f", 0.050, {-0.0114283, -0.0114284, -0.0102393, -0.0105852, -0.0105852, -0.0094015}},
    {"4f", 0.075, {-0.0050935, -0.0050935, -0.0026443, -0.0046527, -0.0046527, -0.0022307}},
    {"5p", 0.025, {-0.0098576, -0.0098576, -0.0098079, -0.0081308, -0.0081308, -0.0080816}},
    {"5d", 0.025, {-0.0096637, -0.0096637, -0.0095141, -0.0086902, -0.0086902, -0.0085415}},
    {"5f", 0.025, {-0.0095837, -0.0095837, -0.0092825, -0.0089622, -0.0089622, -0.0086619}},
    {"5g", 0.025, {-0.0095398, -0.0095398, -0.0090330, -0.0091210, -0.0091210, -0.0086150}},
    {"6p", 0.025, {-0.0044051, -0.0044051, -0.0043583, -0.0035334, -0.0035334, -0.0034876}},
    {"6d", 0.025, {-0.0043061, -0.0043061, -0.0041650, -0.0038209, -0.0038209, -0.0036813}},
    {"6f", 0.025, {-0.0042652, -0.0042652, -0.0039803, -0.0039606, -0.0039606, -0.0036774}},
    {"6g", 0.025, {-0.0042428, -0.0042428, -0.0037611, -0.0040422, -0.0040422, -0.0035623}},
}};

inline constexpr std::array<MolecularRow, 29> kTable2 = {{
    {"2p", 0.025, {-4.81152646, -5.14278553, -3.83953094, -5.07112758, -5.42025940, -4.04668901}},
    {"2p", 0.050, {-4.31837832, -4.62430290, -3.42259525, -4.55137212, -4.87380256, -3.60725796}},
    {"2p", 0.075, {-3.85188684, -4.13335980, -3.02961216, -4.05971155, -4.35637111, -3.19307186}},
    {"2p", 0.100, {-3.41205201, -3.66996049, -2.46161213, -3.59614587, -3.86796955, -2.59442595}},
    {"3p", 0.025, {-1.86633700, -1.95892730, -1.57658128, -1.96703335, -2.06461927, -1.66164415}},
    {"3p", 0.050, {-1.42316902, -1.50416901, -1.17169439, -1.49995469, -1.58532495, -1.23491200}},
    {"3p", 0.075, {-1.03998066, -1.10938179, -0.82678285, -1.09609178, -1.16923738, -0.87139110}},
    {"3p", 0.100, {-0.71676763, -0.77457419, -0.54184665, -0.75544012, -0.81636557, -0.57108145}},
    {"3d", 0.025, {-1.86633700, -1.91628944, -1.69043293, -1.96703335, -2.01968093, -1.78163855}},
    {"3d", 0.050, {-1.42316902, -1.46326703, -1.28220223, -1.49995469, -1.54221615, -1.35138217}},
    {"3d", 0.075, {-1.03998066, -1.07124785, -0.93029598, -1.09609178, -1.12904596, -0.98048917}},
    {"3d", 0.100, {-0.71676763, -0.74022762, -0.63472271, -0.75544012, -0.78016587, -0.66896854}},
    {"4p", 0.025, {-0.85301300, -0.88972668, -0.73465318, -0.89903647, -0.93773100, -0.77429066}},
    {"4p", 0.050, {-0.47981981, -0.50878387, -0.38820195, -0.50570801, -0.53623480, -0.40914700}},
    {"4p", 0.075, {-0.21325325, -0.23361041, -0.15131598, -0.22475912, -0.24621462, -0.15948008}},
    {"4d", 0.025, {-0.85301300, -0.87244037, -0.78327492, -0.89903647, -0.91951202, -0.82553574}},
    {"4d", 0.050, {-0.47981981, -0.49364289, -0.43054552, -0.50570801, -0.52027690, -0.45377517}},
    {"4d", 0.075, {-0.21325325, -0.22198384, -0.18257890, -0.22475912, -0.23396076, -0.19242977}},
    {"4f", 0.025, {-0.85301300, -0.86532198, -0.80704413, -0.89903647, -0.91200956, -0.85058739}},
    {"4f", 0.050, {-0.47981981, -0.48742442, -0.45146566, -0.50570801, -0.51372292, -0.47582404}},
    {"4f", 0.075, {-0.21325325, -0.21724109, -0.19844068, -0.22475912, -0.22896211, -0.20914735}},
    {"5p", 0.025, {-0.40318193, -0.42043305, -0.34678391, -0.42493521, -0.44311709, -0.36549429}},
    {"5d", 0.025, {-0.40318193, -0.41216309, -0.37064268, -0.42493521, -0.43440094, -0.39064034}},
    {"5f", 0.025, {-0.40318193, -0.40875104, -0.38224366, -0.42493521, -0.43080479, -0.40286723}},
    {"5g", 0.025, {-0.40318193, -0.40687867, -0.38901658, -0.42493521, -0.42883140, -0.41000558}},
    {"6p", 0.025, {-0.17919244, -0.18788038, -0.15070181, -0.18886059, -0.19801728, -0.15883277}},
    {"6d", 0.025, {-0.17919244, -0.18365796, -0.16296387, -0.18886059, -0.19356705, -0.17175642}},
    {"6f", 0.025, {-0.17919244, -0.18191355, -0.16892216, -0.18886059, -0.19172852, -0.17803620}},
    {"6g", 0.025, {-0.17919244, -0.18095818, -0.17240246, -0.18886059, -0.19072160, -0.18170426}},
}};

inline constexpr std::array<MolecularRow, 29> kTable3 = {{
    {"2p", 0.025, {-5.35811876, -5.72700906, -4.27570397, -1.374733789, -0.734690030, -0.548509185}},
    {"2p", 0.050, {-4.80894870, -5.14962650, -3.81140413, -1.233833096, -0.660620439, -0.488946426}},
    {"2p", 0.075, {-4.28946350, -4.60291196, -3.37377792, -1.100548657, -0.590485101, -0.432805497}},
    {"2p", 0.100, {-3.79966317, -4.08687021, -2.74125274, -0.974880471, -0.524284624, -0.351661930}},
    {"3p", 0.025, {-2.07835401, -2.18146262, -1.75568186, -0.533243776, -0.279849188, -0.225227854}},
    {"3p", 0.050, {-1.58484188, -1.67504351, -1.30479958, -0.406623254, -0.214883153, -0.167386368}},
    {"3p", 0.075, {-1.15812308, -1.23540823, -0.92070588, -0.297139912, -0.158484490, -0.118112862}},
    {"3p", 0.100, {-0.79819287, -0.86256629, -0.60340076, -0.204792531, -0.110654417, -0.077407337}},
    {"3d", 0.025, {-2.07835401, -2.13398108, -1.88246712, -0.533243776, -0.273758013, -0.241492516}},
    {"3d", 0.050, {-1.58484188, -1.62949505, -1.42786117, -0.406623254, -0.209039964, -0.183173338}},
    {"3d", 0.075, {-1.15812308, -1.19294225, -1.03597816, -0.299139912, -0.153036736, -0.132900580}},
    {"3d", 0.100, {-0.79819287, -0.82431793, -0.70682759, -0.204792531, -0.105747722, -0.090675460}},
    {"4p", 0.025, {-0.94991579, -0.99080017, -0.81811023, -0.243720118, -0.127104916, -0.104951366}},
    {"4p", 0.050, {-0.53432763, -0.56658202, -0.43230193, -0.137092566, -0.072684041, -0.055457903}},
    {"4p", 0.075, {-0.23747895, -0.26014869, -0.16850556, -0.060930029, -0.033373205, -0.021616756}},
    {"4d", 0.025, {-0.94991579, -0.97155012, -0.87225543, -0.243720118, -0.124635422, -0.111897390}},
    {"4d", 0.050, {-0.53432763, -0.54972102, -0.47945575, -0.137092566, -0.070521025, -0.061507037}},
    {"4d", 0.075, {-0.23747895, -0.24720134, -0.20331998, -0.060930029, -0.031712252, -0.026082927}},
    {"4f", 0.025, {-0.94991579, -0.96362308, -0.89872483, -0.243720118, -0.123618500, -0.115293020}},
    {"4f", 0.050, {-0.53432763, -0.54279613, -0.50275243, -0.137092566, -0.069632666, -0.064495655}},
    {"4f", 0.075, {-0.23747895, -0.24191980, -0.22098366, -0.060930029, -0.031034710, -0.028348915}},
    {"5p", 0.025, {-0.44898364, -0.46819450, -0.38617877, -0.115195837, -0.060062386, -0.049540988}},
    {"5d", 0.025, {-0.44898364, -0.45898506, -0.41274791, -0.115195837, -0.058880953, -0.052949414}},
    {"5f", 0.025, {-0.44898364, -0.45518540, -0.42566677, -0.115195837, -0.058393512, -0.054606711}},
    {"5g", 0.025, {-0.44898364, -0.45310033, -0.43320910, -0.115195837, -0.058126029, -0.055574280}},
    {"6p", 0.025, {-0.19954881, -0.20922370, -0.16782162, -0.051198285, -0.026840287, -0.021529017}},
    {"6d", 0.025, {-0.19954881, -0.20452162, -0.18147666, -0.051198285, -0.026237080, -0.023280755}},
    {"6f", 0.025, {-0.19954881, -0.20257904, -0.18811182, -0.051198285, -0.025987876, -0.024131947}},
    {"6g", 0.025, {-0.19954881, -0.20151514, -0.19198748, -0.051198285, -0.025851393, -0.024629136}},
}};

} // namespace mrspec::testing
