#include "mcorr/reference_values.hpp"

#include <map>
#include <stdexcept>

namespace mcorr {

namespace {

// clang-format off
const std::vector<ReferenceValue> kTable = {
  // Twice-corrected θ scheme: θ_0 = (13+30n)/(6(1+6n+10n²)), θ = (1/200)/Φ(5;n).
  {"example1", "example1.initial.difference", "1/40", false, ""},
  {"example1", "example1.initial.limit", "1/200", false, ""},
  {"example1", "example1.monomial.limit", "-773/126000", false, "after subtracting 1/(200n^5)"},
  {"example1", "example1.phi.c4", "773/630", false, ""},
  {"example1", "example1.phi.c3", "21361/15876", false, ""},
  {"example1", "example1.phi.c2", "1348075/2000376", false, ""},
  {"example1", "example1.phi.c1", "-91207415/252047376", false, ""},
  {"example1", "example1.phi.c0", "-178345771979/1746688315680", false, ""},
  {"example1", "example1.difference", "-10992878936527/160060165655040", false, "coefficient of x^12"},
  {"example1", "example1.limit", "-10992878936527/1760661822205440", false, "rate n^-11"},

  // μ scheme: η_0 = (6n-1)/(12n²), η = (1/120)/(n⁴ + b3 n³ + b2 n² + b1 n + b0).
  {"example2", "example2.initial.limit", "1/120", false, ""},
  {"example2", "example2.phi.c3", "0", false, ""},
  {"example2", "example2.phi.c2", "10/21", false, ""},
  {"example2", "example2.phi.c1", "0", false, ""},
  {"example2", "example2.phi.c0", "-241/882", false, ""},
  {"example2", "example2.difference", "-13775/305613", false, "coefficient of x^11"},
  {"example2", "example2.limit", "-13775/3056130", false, "printed unreduced; equals -2755/611226"},

  // ν_0 = H_n - ln n and three successive corrections.
  {"section4", "section4.difference0", "1/2", false, ""},
  {"section4", "section4.C0", "1/2", false, ""},
  {"section4", "section4.phi1.c0", "1/6", false, ""},
  {"section4", "section4.difference1", "-1/24", false, ""},
  {"section4", "section4.C1", "-1/72", false, ""},
  {"section4", "section4.phi2.c2", "23/30", false, ""},
  {"section4", "section4.phi2.c1", "14/25", false, ""},
  {"section4", "section4.phi2.c0", "1333/10500", false, ""},
  {"section4", "section4.phi2.center", "23/90", false, "Φ_2 written in powers of n + 23/90"},
  {"section4", "section4.phi2.shifted2", "0", false, ""},
  {"section4", "section4.phi2.shifted1", "983/2700", false, ""},
  {"section4", "section4.phi2.shifted0", "2197/127575", false, ""},
  {"section4", "section4.difference2", "-7061/5400", true,
   "printed limit of n^8(ν_2(n)-ν_2(n+1)); inconsistent with C_2 = -7061/3780000 (factor 7 gives -7061/540000)"},
  {"section4", "section4.C2", "-7061/3780000", false, ""},
  {"section4", "section4.phi3.c6", "126901/70610", false, ""},
  {"section4", "section4.phi3.c5", "302657774122/78525910575", false, ""},
  {"section4", "section4.phi3.c4", "203050524517143511/52278737145178500", false, ""},
  {"section4", "section4.phi3.c3", "4586975399311716291806/2713180197918474605475", false, ""},
  {"section4", "section4.phi3.c2", "139644786102811402696525439/298861139889036647352440010", false, ""},
  {"section4", "section4.phi3.c1", "1335669056713380727335512329403306/243734857761374337083369364175455", false, ""},
  {"section4", "section4.phi3.c0",
   "1768275723433572920281319954725767947341/1032607098391838516487402648265732653000", false, ""},
  {"section4", "section4.C3",
   "-6044981017774921659252823535814990412377703/102460439337930176798462527774167322493925000", false, ""},

  // Decimal prints, compared as strings.
  {"section4", "section4.ratio.prefix", "0.950367", true,
   "printed digits are rounded; the exact ratio 148281/156025 = 0.9503669... truncates to 0.950366"},
  {"catalog", "remark6.lower", "-1.09418e-69", false, "lower end of ν_3(2^15) - γ"},

  // Lu's continued fraction R_k(n); odd a's follow a_{2k+1} = -a_{2k}.
  {"lu", "lu.a1", "1/2", false, ""},
  {"lu", "lu.a2", "1/6", false, ""},
  {"lu", "lu.a3", "-1/6", false, ""},
  {"lu", "lu.a4", "3/5", false, ""},
  {"lu", "lu.a5", "-3/5", false, ""},
  {"lu", "lu.a6", "79/126", false, ""},
  {"lu", "lu.a7", "-79/126", false, ""},
  {"lu", "lu.a8", "7230/6241", false, ""},
  {"lu", "lu.a9", "-7230/6241", false, ""},
  {"lu", "lu.a10", "4146631/3833346", false, ""},
  {"lu", "lu.a11", "-4146631/3833346", false, ""},
  {"lu", "lu.a12", "306232774533/179081182865", false, ""},
  {"lu", "lu.a13", "-306232774533/179081182865", false, ""},
  {"lu", "lu.C1", "-1/12", false, ""},
  {"lu", "lu.C2", "-1/72", false, ""},
  {"lu", "lu.C3", "1/120", false, ""},
  {"lu", "lu.C4", "1/200", false, ""},
  {"lu", "lu.C5", "-79/25200", false, ""},
  {"lu", "lu.C6", "-6241/3175200", false, ""},
  {"lu", "lu.C7", "241/105840", false, ""},
  {"lu", "lu.C8", "58081/22018248", false, ""},
  {"lu", "lu.C9", "-262445/91974960", false, "printed unreduced; equals -52489/18394992"},
  {"lu", "lu.C10", "-2755095121/892586949408", false, ""},
  {"lu", "lu.C11", "20169451/3821257440", false, ""},
  {"lu", "lu.C12", "406806753641401/45071152103463200", false, ""},
  {"lu", "lu.C13", "-71521421431/5152068292800", false, ""},

  // Landau: series of q_8(n+1) and of ln(n+7/4) - ln(n+3/4) in x = 1/n.
  {"landau", "landau.q8.c1", "1", false, ""},
  {"landau", "landau.q8.c2", "-5/4", false, ""},
  {"landau", "landau.q8.c3", "49/32", false, ""},
  {"landau", "landau.q8.c4", "-235/128", false, ""},
  {"landau", "landau.q8.c5", "4411/2048", false, ""},
  {"landau", "landau.q8.c6", "-20275/8192", false, ""},
  {"landau", "landau.q8.c7", "183077/65536", false, ""},
  {"landau", "landau.q8.c8", "-815195/262144", false, ""},
  {"landau", "landau.q8.c9", "28754131/8388608", false, ""},
  {"landau", "landau.q8.c10", "-125799895/33554432", false, ""},
  {"landau", "landau.q8.c11", "1091975567/268435456", false, ""},
  {"landau", "landau.q8.c12", "-4702048685/1073741824", false, ""},
  {"landau", "landau.q8.c13", "80679143663/17179869184", false, ""},
  {"landau", "landau.q8.c14", "-346250976095/68719476736", false, ""},
  {"landau", "landau.q8.c15", "2947620308941/549755813888", false, ""},
  {"landau", "landau.logdiff.c1", "1", false, ""},
  {"landau", "landau.logdiff.c2", "-5/4", false, ""},
  {"landau", "landau.logdiff.c3", "79/48", false, ""},
  {"landau", "landau.logdiff.c4", "-145/64", false, ""},
  {"landau", "landau.logdiff.c5", "4141/1280", false, ""},
  {"landau", "landau.logdiff.c6", "-14615/3072", false, ""},
  {"landau", "landau.logdiff.c7", "205339/28672", false, ""},
  {"landau", "landau.logdiff.c8", "-179945/16384", false, ""},
  {"landau", "landau.logdiff.c9", "10083481/589824", false, ""},
  {"landau", "landau.logdiff.c10", "-7060405/262144", false, ""},
  {"landau", "landau.logdiff.c11", "494287399/11534336", false, ""},
  {"landau", "landau.logdiff.c12", "-865047235/12582912", false, ""},
  {"landau", "landau.logdiff.c13", "24221854021/218103808", false, ""},
  {"landau", "landau.logdiff.c14", "-84777286235/469762048", false, ""},
  {"landau", "landau.logdiff.c15", "1186886790259/4026531840", false, ""},
  {"landau", "landau.q9q8.valuation", "17", false, "valuation of the series of q_9 - q_8"},
  // π-scaled constants (the printed values carry a factor 1/π).
  {"landau", "landau.difference0", "11/96", false, ""},
  {"landau", "landau.C0", "11/192", false, ""},
  {"landau", "landau.phi1.c1", "3/2", false, ""},
  {"landau", "landau.phi1.c0", "5501/7040", false, ""},
  {"landau", "landau.phi1.shifted0", "1541/7040", false, "Φ_1 = (n+3/4)² + 1541/7040"},
  {"landau", "landau.difference1", "89684299/3027763200", false, ""},
  {"landau", "landau.C1", "89684299/18166579200", false, ""},
  {"landau", "landau.phi2.shifted4", "1092000370209/631377464960", false, "coefficient of (n+3/4)^4"},
  {"landau", "landau.phi2.shifted2", "-111862508515629162375/181198865117870921728", false, ""},
  {"landau", "landau.phi2.shifted0",
   "1824588073050833974528912179250963/540823069619183303269309779804160", false, ""},
  {"landau", "landau.C2",
   "-5691942495934169497683736629269380931519449/65873649616252391923660120676946385934745600", true,
   "printed with a minus sign; the exact derivation and direct evaluation of n^14 u_2(n) give the positive value"},
  // Expansion G(n) = c_0 + ln(m + a/m + b/m³ + c/m⁵)/π + O(m^-8), m = n + 3/4.
  {"landau", "landau.chen.a", "11/192", false, ""},
  {"landau", "landau.chen.b", "-2009/184320", false, ""},
  {"landau", "landau.chen.c", "2599153/371589", true, "magnitude implausible next to a and b; re-derived value reported"},

  // Initial correction ½ln(n²+n+1/3), even polynomials in n + 1/2.
  {"remark8", "remark8.C0", "-1/180", false, ""},
  {"remark8", "remark8.phi1.shifted2", "85/126", false, ""},
  {"remark8", "remark8.phi1.shifted0", "-18287/63504", false, ""},
  {"remark8", "remark8.C1", "457528/123773265", false, ""},
  {"remark8", "remark8.phi2.shifted8", "28038237821/5995446912", false, ""},
  {"remark8", "remark8.phi2.shifted6", "11612938185382451401/35945383674610335744", false, ""},
  {"remark8", "remark8.phi2.shifted4", "163544744039006129564874642269/8307589279805355451415003136", false, ""},
  {"remark8", "remark8.phi2.shifted2",
   "-2762081970439756978947606523226093660107/15021373006058621011789214048600457216", false, ""},
  {"remark8", "remark8.phi2.shifted0",
   "2771007475606973680958970352585491511233080640189551/1350897666047614749541649384438829437061829754880",
   false, ""},
  {"remark8", "remark8.C2",
   "1864841554154123790589398711158437373230857062719102654146029/"
   "18653565767176841210967548892254397636853629986414159462400",
   false, ""},
  {"remark8", "remark8.rate2", "22", false, "exponent l with n^l (ν_2(n) - γ) -> C_2"},

  // Catalog constants of the classical approximants.
  {"catalog", "mu.bound.constant", "13775/3056130", false, ""},
  {"catalog", "mortici2010.numerator.c0a", "227/240", false, "printed without a power of n"},
  {"catalog", "mortici2010.numerator.c0b", "107/480", true, "printed without a power of n; stored verbatim"},
  {"catalog", "mortici2010.denominator.c0", "97/240", false, ""},
  {"catalog", "rho.c1", "1/2", false, ""},
  {"catalog", "rho.c2", "1/24", false, ""},
  {"catalog", "rho.c3", "-1/48", false, ""},
  {"catalog", "rho.c4", "23/5760", false, ""},
  {"catalog", "mortici-chen.c2", "-1/180", false, ""},
  {"catalog", "mortici-chen.c3", "8/2835", false, ""},
  {"catalog", "mortici-chen.c4", "5/1512", true,
   "printed with a plus sign; -5/1512 is forced by the n^-8 stage and is the only value reaching the printed n^-12 limit"},
  {"catalog", "mortici-chen.c5", "592/93555", false, ""},
  {"catalog", "mortici-chen.limit", "-796801/43783740", false, "rate n^-12"},
  {"catalog", "falaleev.upper", "10976/10000", false, "1.0976"},
};
// clang-format on

}  // namespace

const std::vector<ReferenceValue>& reference_values() { return kTable; }

const ReferenceValue& reference_entry(const std::string& key) {
  static const std::map<std::string, const ReferenceValue*> index = [] {
    std::map<std::string, const ReferenceValue*> m;
    for (const auto& v : kTable) m.emplace(v.key, &v);
    return m;
  }();
  const auto it = index.find(key);
  if (it == index.end()) throw std::out_of_range("no reference value '" + key + "'");
  return *it->second;
}

Rational reference(const std::string& key) { return Rational::parse(reference_entry(key).value); }

}  // namespace mcorr
