#pragma once

// Constants shared by the scalar and vector kernels. Only data lives here so
// the differently-compiled translation units never share inline code.
namespace aforge::kernels::coef {

// below this eps the log in the angle average is replaced by its series
constexpr double kSeriesSwitch = 0.2;

// atanh(e)/e - 1 = sum_j e^(2j) / (2j+1); 1/(2j+1) for j = 12 .. 1, Horner order
constexpr double kAtanhSeries[12] = {1.0 / 25, 1.0 / 23, 1.0 / 21, 1.0 / 19, 1.0 / 17, 1.0 / 15,
                                     1.0 / 13, 1.0 / 11, 1.0 / 9,  1.0 / 7,  1.0 / 5,  1.0 / 3};

// Cephes log: log(1+x) = x - x^2/2 + x^3 P(x)/Q(x) on [sqrt(1/2)-1, sqrt(2)-1]
constexpr double kLogP[6] = {1.01875663804580931796E-4, 4.97494994976747001425E-1,
                             4.70579119878881725854E0,  1.44989225341610930846E1,
                             1.79368678507819816313E1,  7.70838733755885391666E0};
constexpr double kLogQ[5] = {1.12873587189167450590E1, 4.52279145837532221105E1,
                             8.29875266912776603211E1, 7.11544750618563894466E1,
                             2.31251620126765340583E1};
constexpr double kLn2Hi = 0.693359375;
constexpr double kLn2Lo = -2.121944400546905827679e-4;
constexpr double kSqrtHalf = 0.70710678118654752440;

// tau_nu(X) = (nu/2) t w^2 [1/(8 nu^2) + u P2(u)/nu^4 + u^2 P3(u)/nu^6 + u^3 P4(u)/nu^8]
// with t = nu/sqrt(nu^2+X^2), u = t^2, w = 1 - u. Coefficients in increasing u.
constexpr double kDebyeP1 = 1.0 / 8;
constexpr double kDebyeP2[3] = {9.0 / 128, -49.0 / 64, 105.0 / 128};
constexpr double kDebyeP3[5] = {225.0 / 1024, -1765.0 / 256, 16995.0 / 512, -13013.0 / 256,
                                25025.0 / 1024};
constexpr double kDebyeP4[7] = {55125.0 / 32768,     -1698543.0 / 16384, 34597563.0 / 32768,
                                -32753721.0 / 8192,  227475963.0 / 32768, -92147055.0 / 16384,
                                56581525.0 / 32768};

}  // namespace aforge::kernels::coef
