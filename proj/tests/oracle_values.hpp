#pragma once
// Generated by tests/oracle/mpmath_oracle.py; do not edit by hand.

namespace oracle {

struct OracleRow {
    double a, b, value;
};

inline constexpr double kC0 = 2.7862198568417866719;
inline constexpr double kBetaHalf = 4.8442241102738380992;
inline constexpr double kBetaTwo = 9.6884482205476761984;
inline constexpr double kEminus3 = 2.4221120551369190496;

inline constexpr OracleRow kEllipK[] = {
    {-10.0, 0, 0.7908718902387384752},
    {-1.0, 0, 1.3110287771460599052},
    {0.0, 0, 1.5707963267948966192},
    {0.1, 0, 1.6124413487202193982},
    {0.5, 0, 1.8540746773013719184},
    {0.9, 0, 2.5780921133481731882},
    {0.999999, 0, 8.2940514636154399853},
};
inline constexpr OracleRow kEllipE[] = {
    {-10.0, 0, 3.6391380384177681635},
    {-1.0, 0, 1.910098894513856009},
    {0.0, 0, 1.5707963267948966192},
    {0.1, 0, 1.5307576368977632025},
    {0.5, 0, 1.3506438810476755025},
    {0.9, 0, 1.1047747327040733261},
    {0.999999, 0, 1.0000038970261720612},
    {1.0, 0, 1.0},
};
inline constexpr OracleRow kEllipPi[] = {
    {-3.0, 0.5, 0.8760028274011437395},
    {0.3, 0.5, 2.2503768219439466847},
    {-0.5, -2.0, 0.98313587165495728025},
    {0.8, 0.1, 3.6420745125156641557},
    {0.5, 0.25, 2.4136715042011946407},
    {-8.0, 0.9, 0.66504325938041030708},
};

inline constexpr OracleRow kG[] = {
    {0.5, 0.3, 3.0808144543647197066},
    {1.5, 0.3, 5.8915550736406376734},
    {3.0, 0.7, 5.2501981064395806576},
    {1.5, 0.0, 7.9327197946452948557},
    {0.2, 0.05, 3.892499818532182769},
    {0.3, 0.9, 0.22844358003160735367},
    {2.0, 0.5, 5.6327484208463702658},
    {0.7, 0.99, 0.044096445748098068521},
};
inline constexpr OracleRow kGPrime[] = {
    {0.3, 0.4, -4.8743355207123000782},
    {1.5, 0.6, -8.2871959349550857236},
    {0.8, 0.2, -6.0446503225149026111},
};

inline constexpr OracleRow kJ0[] = {
    {0.1, 0, 0.72102640532647785363},
    {0.2, 0, 0.75534317528415717023},
    {0.25, 0, 0.77978090298172850363},
    {0.3, 0, 0.80955198443043854401},
    {0.4, 0, 0.88805756303460084033},
    {0.45, 0, 0.93903708664796716998},
};
inline constexpr OracleRow kAlpha[] = {
    {0.1, 0, 5.7365424977980921972},
    {0.2, 0, 5.8921210290992582751},
    {0.25, 0, 5.9799325191711976389},
    {0.3, 0, 6.0670641432911219179},
    {0.4, 0, 6.2162351767507062479},
    {0.45, 0, 6.2644999124088160939},
};
inline constexpr OracleRow kBeta[] = {
    {0.3, 0, 4.3859100695689089153},
    {0.5, 0, 4.8442241102738380992},
    {1.0, 0, 6.2831853071795864769},
    {1.2, 0, 6.9257911958096816436},
    {2.0, 0, 9.6884482205476761984},
    {3.0, 0, 13.36489322055525823},
    {5.0, 0, 21.010044539689000945},
};

}  // namespace oracle
