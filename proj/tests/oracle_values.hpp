// Generated by tests/oracles/make_oracles.py. Do not edit.
#pragma once
#include <complex>

namespace oracle {
inline constexpr double kLogGammaCases[][4] = {
    {5.0e-1, 0.0, 5.7236494292470008707e-1, 0.0},
    {3.7000000000000001776, -2.1000000000000000888, 7.8534695807382238876e-1, -2.5830129251152622486},
    {-4.2999999999999998224, 2.000000000000000111e-1, -2.5402514644485927211, -1.5009352527003275748e+1},
    {1.0e+1, 4.0e+1, -2.6780956023147975363e+1, 1.2136097759201601726e+2},
    {1.0000000000000000555e-1, 1.0000000000000000208e-2, 2.2476658232303512977, -1.0390589166538166232e-1},
    {-2.05e+1, 1.0, -4.5133711100861662931e+1, -6.2928451384220427566e+1},
    {2.5e+1, -3.0e+1, 3.9427996866863048254e+1, -1.0140802825393379099e+2},
    {-7.25, -3.5, -1.7426354319204319163e+1, 1.7066078699258582714e+1},
    {1.0000000000000000208e-3, 0.0, 6.9071788853838536617, 0.0},
    {5.0e-1, 4.8e+1, -7.4479285152950364981e+1, 1.3781851660111501829e+2}};
inline constexpr double kDigammaCases[][4] = {
    {5.0e-1, 0.0, -1.9635100260214234794, 0.0},
    {3.7000000000000001776, -2.1000000000000000888, 1.3433740763984103106, -5.781722556465365556e-1},
    {-4.2999999999999998224, 2.000000000000000111e-1, 2.9243837102082605675, 2.2555165386680425923},
    {1.0e+1, 4.0e+1, 3.7162938427531848141, 1.3376054399965465189},
    {1.0000000000000000555e-1, 1.0000000000000000208e-2, -1.0324651973054542267e+1, 1.0044312493205374543},
    {-2.05e+1, 1.0, 3.0457487463544123581, 3.0823068829442666582},
    {2.5e+1, -3.0e+1, 3.6566879738403827675, -8.859478664343522303e-1},
    {-7.25, -3.5, 2.1408796523112553106, -2.7178291446624787836},
    {1.0000000000000000208e-3, 0.0, -1.0005755719318102797e+3, 0.0},
    {5.0e-1, 4.8e+1, 3.871182925043230745, 1.5707963267948966192}};
inline constexpr double kBarnesGCases[][4] = {
    {5.0e-1, 0.0, -5.054330544896953828e-1, 0.0},
    {1.5, 2.0, 3.6484896678394086428e-1, -1.5345379960690983111},
    {-2.5, 0.0, -2.5747484768531477431, 0.0},
    {2.5, 0.0, -5.3850349200240518071e-2, 0.0},
    {1.0300000000000000711e+1, 4.0, 2.1798086730550379871e+1, -1.9937903012240498141},
    {2.999999999999999889e-1, -7.0, -3.7221138943546118542, -1.2659932147408586654},
    {-6.2000000000000001776, 1.1000000000000000888, 2.9025761971415212128e+1, -2.78393384993318968},
    {1.9e+1, 0.0, 2.4137482006935207198e+2, 0.0},
    {3.0, 1.2e+1, -1.0217370775499280062e+2, -6.8680084658886384333e-1}};
inline constexpr double kDoubleGammaCases[][5] = {
    {1.3, 0, 0.5, 8.5568860446445698364e-3, 0.0},
    {2, 1, 0.5, -4.5994831858326990453e-2, -3.9321250182618478365e-1},
    {1.7, -0.4, 0.8, 5.9017417820089297868e-2, 6.7694162758418586207e-2},
    {3.5, 2.5, 0.3, -2.9098664352510803069, -1.483530662524668579},
    {1.0, 0, 1.0, 0.0, 0.0},
    {2.2, 0, 0.7, -5.5070448087912171003e-2, 0.0}};
inline constexpr double kBesselCases[][3] = {
    {1e-08, 1.8536612259610778388e+1, 9.9999999999999902725e+7},
    {0.001, 7.0236888005623813228, 9.9999623815608555346e+2},
    {0.5, 9.2441907122766586178e-1, 1.6564411200033008937},
    {1, 4.2102443824070833334e-1, 6.0190723019723457474e-1},
    {2.5, 6.2347553200366186029e-2, 7.3890816347747063649e-2},
    {10, 1.7780062316167651811e-5, 1.8648773453825584597e-5},
    {55, 2.1913102183534150766e-25, 2.2111422716117465427e-25},
    {300, 3.7236948548891432633e-132, 3.7298958583323726986e-132},
    {700, 4.669776431685376881e-306, 4.6731107967079661091e-306}};
inline constexpr double kGBetaCases[][3] = {
    {-8, 0.4, 9.5534507837031459355e-1},
    {-2, 0.4, 6.0796389756773700779e-1},
    {0, 0.6, 3.0566559109321919716e-1},
    {1.5, 0.8, 4.6442174703765570831e-2},
    {4, 0.6, 1.1238824697933422935e-4},
    {0, 1.0, 2.7973176363304485457e-1},
    {-3, 1.0, 8.5288817703972610907e-1},
    {2, 0.3, 1.4849133956967499286e-1}};
inline constexpr double kClmCases[][3] = {
    {0, 2, 2.6183670204933100307e-1},
    {-2, 2, 1.4800911465452607393e-1},
    {2.5, 1.5, 4.6462248390031912791e-3},
    {-4, 3, 4.5170266081251725385e-2}};
inline constexpr double kMesoCumulants[][2] = {
    {1, 5.0769160378758879523e-1},
    {2, 6.4094725347858114918},
    {3, -5.1728035915979599242},
    {4, 1.3560236672249694011e+1},
    {5, -5.0965270302675932641e+1}};
inline constexpr double kLogZe_b05_N64 = 5.1291866796383038577;
inline constexpr double kLogMuE_x05_N64 = -2.394126162649099351;
inline constexpr double kPathIntegral_p1_b05_K512 = 1.0746377248746776965e-2;
inline constexpr double kTwoHarmonic512 = 1.3633033069099446218e+1;
inline constexpr double kArithmeticFactor[][3] = {
    {0.5, 9.8835908258289790046e-1, 9.8835908362171778712e-1},
    {0.75, 9.9353816020405688451e-1, 9.9353816079145501264e-1},
    {2.0, 6.0792710216301415656e-1, 6.0792714305670766076e-1}};
inline constexpr double kSiegelTheta[][2] = {
    {100, 8.7972165231787219625e+1},
    {1000, 2.0345464280380316087e+3},
    {10000, 3.1861923830835820873e+4},
    {1000000, 5.4888163530784034449e+6}};
inline constexpr double kZetaHalfLine[][4] = {
    {14, 2.2241142609993589246e-2, -1.032581232664500579e-1, -1.0562626777988261014e-1},
    {20, 4.2991386043784337216e-1, -1.0642914430805891127, 1.1478424121851972776},
    {50, -8.1712108320979975048e-2, 3.3079219403866129559e-1, -3.4073500595502498275e-1},
    {100, 2.6926198856813240905, -2.0386029602598161771e-2, 2.692697056664463475},
    {500, -3.9625650727514661783e-1, -1.4181267413453708155, 1.4724478510550852727},
    {1000, 3.5633436719439605507e-1, 9.3199783123299366512e-1, 9.9779463752158661399e-1},
    {5000, 4.0684271363543255898e-1, -6.9376415919808510245e-1, -8.0425723635293984958e-1},
    {10000, -3.3937380263883445757e-1, -3.7091505973206031474e-2, -3.4139472423120855918e-1},
    {1000000, 7.6089069738227100006e-2, 2.8051021010192989554, -2.8061338784306984787},
    {36000000, -1.3328477808011387339e-1, -1.0772668316024777344e-1, -1.7137639957874484087e-1}};
inline constexpr double kZetaHalf = -1.4603545088095868129;
inline const std::complex<double> kZetaOnePlus001i{5.7721614942066140875e-1, -9.9999271841202856075e+1};
inline const std::complex<double> kZetaComplexA{2.5225182918560734806e-1, -5.2592076265002481018e-1};
inline const std::complex<double> kZetaComplexB{1.0180852073245254041, -1.2962707463732325097e-1};
inline const std::complex<double> kZetaComplexC{1.7679928672283258203, -1.237353337458707459e-1};
inline constexpr double kFirstZero = 1.413472514173469379e+1;
inline constexpr double kWindowMaxFirst[][2] = {
    {1.7882582076936682719e+1, 2.3405510299088180828}};
inline constexpr double kZetaPartitionT1e6Beta1 = 5.4064495920236064237;
inline constexpr double kHalfReLogZeta1p001i = 2.3025897816314272298;
}  // namespace oracle
