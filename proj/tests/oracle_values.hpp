// Generated by tests/oracles/make_oracles.py (mpmath 1.3.0, 30 digits). Do not edit.
#pragma once

#include <complex>

namespace oracle {

using cplx = std::complex<double>;

// k, nu, r, log P, P'/P, log Q, Q'/Q  (P = P^{-k}_nu(cosh r), Q Olver's bold Q^k_nu)
struct LegendreRow { double k; cplx nu; double r; cplx logP, dlogP, logQ, dlogQ; };
inline const LegendreRow kLegendre[] = {
    {0.0, {0.2999999999999999889, 0.2000000000000000111}, 0.1, {0.0008746041762227895592, 0.0007993174242376988905}, {0.017484170366739176727, 0.015972712104587767136}, {1.0776443124810729572, -0.05360202359878649566}, {-3.8379362571205379193, -0.31276686305615009822}},
    {0.0, {2.5, -4.0}, 1.0, {1.2166716922932609896, 2.7750550873370249275}, {2.3197840503661318249, -4.0012265869702101786}, {-2.7126067526968880464, -2.9011434427390634831}, {-3.6453205840571664783, 4.0105936705869329445}},
    {0.5, {-3.2000000000000001776, 1.6999999999999999556}, 0.5, {-0.39244000652628756326, -0.35405574770336622147}, {1.7701474087213422375, -1.303965272754570267}, {5.2427892782481515131, -1.7164599042522775185}, {1.6180232931306737533, -1.6999999999999999556}},
    {1.0, {7.0, 12.0}, 1.0, {2.5073286599435679729, -2.0551087806240019763}, {6.8526655209074370696, 11.982126409199085021}, {-9.8242534398641956584, -2.1973056798575217866}, {-8.1672964323875047597, -11.985294451203112603}},
    {1.5, {-0.4000000000000000222, 9.0}, 2.0, {-5.533600057881222128, 2.9882536641611706859}, {7.0894900504744847699, 3.0221135120820770299}, {11.281872907897910242, 1.7097173571442497123}, {-0.61970799938348433066, -8.9916858974872462435}},
    {2.0, {-11.0, -6.0}, 1.0, {3.0938931308095720757, -1.4823834952392915912}, {9.9471586754265355659, 5.9326953557883069998}, {39.848890417995370001, 1.3229349071421412824}, {9.947158655313771098, 5.9326953726414242196}},
    {3.5, {15.0, 3.0}, 0.5, {-4.7001850986343329935, 0.89520858118333951453}, {15.926941779869268712, 2.697583224182514678}, {-35.803862191530840387, 2.6631987943690154747}, {-17.770713317096074132, -2.8074635762875997821}},
    {5.0, {-20.0, 8.0}, 2.0, {20.138538299324299456, -1.4960735352996918566}, {19.024226433491430532, -7.9814605516712815145}, {98.079176508188175032, 1.0505405845599487658}, {19.024226433491430532, -7.9814605516712815145}},
    {7.5, {1.25, -22.0}, 1.0, {-24.28596839899234293, 0.86854823187613512252}, {1.5358185708939189448, -22.719959779384968693}, {25.128517390816658904, 2.7041638696734414401}, {-2.5410769813813855388, 21.07960789182324834}},
    {10.0, {-6.5, 0.2999999999999999889}, 0.1, {-45.061956886341470848, -0.00081814002008270630749}, {99.99571250115210547, -0.016361952872056390724}, {39.62186653241647129, -0.4159379274863210799}, {-100.03184926096393533, 0.019996187597811085195}},
    {10.0, {24.0, -2.0}, 2.0, {11.942699653675697467, 3.0010643223819610309}, {24.141235931998856187, -1.9864670606095473894}, {-105.65526657134435906, -2.1206988219051530799}, {-25.16583456946119943, 1.9885346310580797109}},
    {4.0, {-0.5, 0.0}, 1.0, {-6.2788220069738190955, 0.0}, {3.3766151547808694708, 0.0}, {1.7593803446236168345, 6.7827421282951197152e-31}, {-3.3378604239386141973, 2.263984651581744662e-30}},
    {2.5, {-2.0, 0.0}, 0.5, {-4.6822309249632530315, 0.0}, {4.941233249405304147, 0.0}, {3.138135516365220531, 4.239213830184449822e-31}, {-5.200916394956117864, 2.2047796711131025195e-30}},
    {6.0, {3.0, 0.0}, 1.5, {-8.3009867768854662706, 0.0}, {4.1824694438642016569, 0.0}, {-7.457902238862753931, 1.0174113192442679573e-30}, {-4.8540844669336499644, 4.9386004812260739929e-30}},
    {8.5, {-14.199999999999999289, -17.800000000000000711}, 1.0, {-16.611866468083801899, -1.4865942021328329768}, {13.76325655572624745, 16.821998738237474055}, {79.635898010918824311, 1.2826338543314824105}, {13.763256555093315439, 16.821998738500706177}},
    {0.5, {18.0, 15.0}, 2.0, {32.266477718658267639, -2.097224761185781352}, {17.981342639636225952, 15.0}, {-69.858176546412288984, -0.10024009088624872719}, {-19.018657360363774048, -15.0}},
    {9.0, {-1.5, 0.0}, 2.0, {-15.160565950486688014, 0.0}, {2.5903031340116523135, 0.0}, {2.6462272299712644261, 1.5261169794434213761e-30}, {-2.7575975618266023632, 4.2084164615753578258e-30}},
    {3.0, {0.10000000000000000555, 24.5}, 0.5, {-11.419126779103316253, 0.40014951485384699259}, {-23.582223734693520932, 14.734927034130787464}, {34.317129782030032275, 1.0856173044859902964}, {-1.7580066030308119694, -23.844564754237158431}},
};

struct HRow { cplx alpha; double r; double H; };
inline const HRow kH[] = {
    {{0.5, 0.5}, 1.0, 0.0077184074826403496994},
    {{2.0, 0.10000000000000000555}, 1.0, 3.3254380089446571157},
    {{0.2999999999999999889, 2.0}, 0.5, 0.10107692658051214772},
    {{1.5, -1.0}, 2.0, 5.5303613850994344628},
    {{0.050000000000000002776, 0.9000000000000000222}, 1.0, 0.026354896889217341442},
    {{4.0, 3.0}, 1.5, 11.823716131673990958},
    {{0.80000000000000004441, 0.0}, 1.0, -0.48849492181650185915},
    {{0.0, 0.5}, 1.0, -0.35551927943844411934},
};

struct RhoRow { double theta; double r0; double rho; };
inline const RhoRow kRho[] = {
    {0.0, 1.0, 0.93944151368039713662},
    {0.7, 1.0, 0.70955020665532214708},
    {-1.2, 1.0, 0.73049968005706050991},
    {0.3, 0.5, 1.4459280929910185679},
    {1.0, 2.0, 0.2353656854399370868},
};

struct WeylRow { int n; double h0; double An; double edge; };
inline const WeylRow kWeyl[] = {
    {1, 3.04685513410587, 3.15363394334841, 3.412261884},
    {2, 1.27952937553226, 1.55507484840358, 1.626843381},
    {3, 0.377268612325837, 0.800256586114548, 0.5471423815},
};

struct StepRow { int n; int l; cplx c; cplx s; cplx logG; };
inline const StepRow kStep[] = {
    {1, 0, {1.0, 0.0}, {-3.2000000000000001776, 5.0999999999999996447}, {15.725809401513633928, 0.31122613066545283567}},
    {1, 4, {1.0, 0.0}, {-10.5, -12.0}, {49.895647543268367043, -1.6426535519165433878}},
    {2, 0, {1.0, 0.0}, {-0.69999999999999995559, 0.4000000000000000222}, {0.48567478549382701811, -2.9861141830682277049}},
    {2, 3, {1.0, 0.0}, {-15.0, 20.0}, {92.436534507552112564, -1.8793230292648940319}},
    {2, 12, {1.0, 0.0}, {0.2999999999999999889, -7.0}, {-16.246290808544615434, -1.1988311579087682557}},
    {1, 20, {1.0, 0.0}, {-25.0, 3.0}, {32.353554378819342368, 1.3789749908614897277}},
    {2, 5, {0.0, 1.0}, {-8.0, 8.0}, {28.244393949357867961, -2.0395364231790781385}},
    {1, 2, {0.0, 1.0}, {-3.0, -14.0}, {24.661215944530352676, -0.057198186390467075545}},
    {3, 1, {2.0, 0.0}, {-4.4000000000000003553, 2.2000000000000001776}, {13.52430156346291822, -2.7280135191181239131}},
    {2, 30, {1.0, 0.0}, {-20.0, 18.0}, {4.4576569660722235176, 0.11148436210690838008}},
    {2, 2, {1.0e-6, 0.0}, {-12.099999999999999645, 15.0}, {56.871428672813396244, -2.6798627510806358396}},
};

}  // namespace oracle
