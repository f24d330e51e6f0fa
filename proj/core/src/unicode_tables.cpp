// Generated by scripts/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.
#include "unicode_tables.hpp"

namespace charcrf::detail {

const NfkcEntry kNfkcEntries[] = {
  {0xA0,0,1},
  {0xA8,1,2},
  {0xAA,3,1},
  {0xAF,4,2},
  {0xB2,6,1},
  {0xB3,7,1},
  {0xB4,8,2},
  {0xB5,10,1},
  {0xB8,11,2},
  {0xB9,13,1},
  {0xBA,14,1},
  {0xBC,15,3},
  {0xBD,18,3},
  {0xBE,21,3},
  {0x132,24,2},
  {0x133,26,2},
  {0x13F,28,2},
  {0x140,30,2},
  {0x149,32,2},
  {0x17F,34,1},
  {0x1C4,35,2},
  {0x1C5,37,2},
  {0x1C6,39,2},
  {0x1C7,41,2},
  {0x1C8,43,2},
  {0x1C9,45,2},
  {0x1CA,47,2},
  {0x1CB,49,2},
  {0x1CC,51,2},
  {0x1F1,53,2},
  {0x1F2,55,2},
  {0x1F3,57,2},
  {0x2B0,59,1},
  {0x2B1,60,1},
  {0x2B2,61,1},
  {0x2B3,62,1},
  {0x2B4,63,1},
  {0x2B5,64,1},
  {0x2B6,65,1},
  {0x2B7,66,1},
  {0x2B8,67,1},
  {0x2D8,68,2},
  {0x2D9,70,2},
  {0x2DA,72,2},
  {0x2DB,74,2},
  {0x2DC,76,2},
  {0x2DD,78,2},
  {0x2E0,80,1},
  {0x2E1,81,1},
  {0x2E2,82,1},
  {0x2E3,83,1},
  {0x2E4,84,1},
  {0x340,85,1},
  {0x341,86,1},
  {0x343,87,1},
  {0x344,88,2},
  {0x374,90,1},
  {0x37A,91,2},
  {0x37E,93,1},
  {0x384,94,2},
  {0x385,96,3},
  {0x387,99,1},
  {0x3D0,100,1},
  {0x3D1,101,1},
  {0x3D2,102,1},
  {0x3D3,103,1},
  {0x3D4,104,1},
  {0x3D5,105,1},
  {0x3D6,106,1},
  {0x3F0,107,1},
  {0x3F1,108,1},
  {0x3F2,109,1},
  {0x3F4,110,1},
  {0x3F5,111,1},
  {0x3F9,112,1},
  {0x587,113,2},
  {0x675,115,2},
  {0x676,117,2},
  {0x677,119,2},
  {0x678,121,2},
  {0x958,123,2},
  {0x959,125,2},
  {0x95A,127,2},
  {0x95B,129,2},
  {0x95C,131,2},
  {0x95D,133,2},
  {0x95E,135,2},
  {0x95F,137,2},
  {0x9DC,139,2},
  {0x9DD,141,2},
  {0x9DF,143,2},
  {0xA33,145,2},
  {0xA36,147,2},
  {0xA59,149,2},
  {0xA5A,151,2},
  {0xA5B,153,2},
  {0xA5E,155,2},
  {0xB5C,157,2},
  {0xB5D,159,2},
  {0xE33,161,2},
  {0xEB3,163,2},
  {0xEDC,165,2},
  {0xEDD,167,2},
  {0xF0C,169,1},
  {0xF43,170,2},
  {0xF4D,172,2},
  {0xF52,174,2},
  {0xF57,176,2},
  {0xF5C,178,2},
  {0xF69,180,2},
  {0xF73,182,2},
  {0xF75,184,2},
  {0xF76,186,2},
  {0xF77,188,3},
  {0xF78,191,2},
  {0xF79,193,3},
  {0xF81,196,2},
  {0xF93,198,2},
  {0xF9D,200,2},
  {0xFA2,202,2},
  {0xFA7,204,2},
  {0xFAC,206,2},
  {0xFB9,208,2},
  {0x10FC,210,1},
  {0x1D2C,211,1},
  {0x1D2D,212,1},
  {0x1D2E,213,1},
  {0x1D30,214,1},
  {0x1D31,215,1},
  {0x1D32,216,1},
  {0x1D33,217,1},
  {0x1D34,218,1},
  {0x1D35,219,1},
  {0x1D36,220,1},
  {0x1D37,221,1},
  {0x1D38,222,1},
  {0x1D39,223,1},
  {0x1D3A,224,1},
  {0x1D3C,225,1},
  {0x1D3D,226,1},
  {0x1D3E,227,1},
  {0x1D3F,228,1},
  {0x1D40,229,1},
  {0x1D41,230,1},
  {0x1D42,231,1},
  {0x1D43,232,1},
  {0x1D44,233,1},
  {0x1D45,234,1},
  {0x1D46,235,1},
  {0x1D47,236,1},
  {0x1D48,237,1},
  {0x1D49,238,1},
  {0x1D4A,239,1},
  {0x1D4B,240,1},
  {0x1D4C,241,1},
  {0x1D4D,242,1},
  {0x1D4F,243,1},
  {0x1D50,244,1},
  {0x1D51,245,1},
  {0x1D52,246,1},
  {0x1D53,247,1},
  {0x1D54,248,1},
  {0x1D55,249,1},
  {0x1D56,250,1},
  {0x1D57,251,1},
  {0x1D58,252,1},
  {0x1D59,253,1},
  {0x1D5A,254,1},
  {0x1D5B,255,1},
  {0x1D5C,256,1},
  {0x1D5D,257,1},
  {0x1D5E,258,1},
  {0x1D5F,259,1},
  {0x1D60,260,1},
  {0x1D61,261,1},
  {0x1D62,262,1},
  {0x1D63,263,1},
  {0x1D64,264,1},
  {0x1D65,265,1},
  {0x1D66,266,1},
  {0x1D67,267,1},
  {0x1D68,268,1},
  {0x1D69,269,1},
  {0x1D6A,270,1},
  {0x1D78,271,1},
  {0x1D9B,272,1},
  {0x1D9C,273,1},
  {0x1D9D,274,1},
  {0x1D9E,275,1},
  {0x1D9F,276,1},
  {0x1DA0,277,1},
  {0x1DA1,278,1},
  {0x1DA2,279,1},
  {0x1DA3,280,1},
  {0x1DA4,281,1},
  {0x1DA5,282,1},
  {0x1DA6,283,1},
  {0x1DA7,284,1},
  {0x1DA8,285,1},
  {0x1DA9,286,1},
  {0x1DAA,287,1},
  {0x1DAB,288,1},
  {0x1DAC,289,1},
  {0x1DAD,290,1},
  {0x1DAE,291,1},
  {0x1DAF,292,1},
  {0x1DB0,293,1},
  {0x1DB1,294,1},
  {0x1DB2,295,1},
  {0x1DB3,296,1},
  {0x1DB4,297,1},
  {0x1DB5,298,1},
  {0x1DB6,299,1},
  {0x1DB7,300,1},
  {0x1DB8,301,1},
  {0x1DB9,302,1},
  {0x1DBA,303,1},
  {0x1DBB,304,1},
  {0x1DBC,305,1},
  {0x1DBD,306,1},
  {0x1DBE,307,1},
  {0x1DBF,308,1},
  {0x1E9A,309,2},
  {0x1E9B,311,1},
  {0x1F71,312,1},
  {0x1F73,313,1},
  {0x1F75,314,1},
  {0x1F77,315,1},
  {0x1F79,316,1},
  {0x1F7B,317,1},
  {0x1F7D,318,1},
  {0x1FBB,319,1},
  {0x1FBD,320,2},
  {0x1FBE,322,1},
  {0x1FBF,323,2},
  {0x1FC0,325,2},
  {0x1FC1,327,3},
  {0x1FC9,330,1},
  {0x1FCB,331,1},
  {0x1FCD,332,3},
  {0x1FCE,335,3},
  {0x1FCF,338,3},
  {0x1FD3,341,1},
  {0x1FDB,342,1},
  {0x1FDD,343,3},
  {0x1FDE,346,3},
  {0x1FDF,349,3},
  {0x1FE3,352,1},
  {0x1FEB,353,1},
  {0x1FED,354,3},
  {0x1FEE,357,3},
  {0x1FEF,360,1},
  {0x1FF9,361,1},
  {0x1FFB,362,1},
  {0x1FFD,363,2},
  {0x1FFE,365,2},
  {0x2000,367,1},
  {0x2001,368,1},
  {0x2002,369,1},
  {0x2003,370,1},
  {0x2004,371,1},
  {0x2005,372,1},
  {0x2006,373,1},
  {0x2007,374,1},
  {0x2008,375,1},
  {0x2009,376,1},
  {0x200A,377,1},
  {0x2011,378,1},
  {0x2017,379,2},
  {0x2024,381,1},
  {0x2025,382,2},
  {0x2026,384,3},
  {0x202F,387,1},
  {0x2033,388,2},
  {0x2034,390,3},
  {0x2036,393,2},
  {0x2037,395,3},
  {0x203C,398,2},
  {0x203E,400,2},
  {0x2047,402,2},
  {0x2048,404,2},
  {0x2049,406,2},
  {0x2057,408,4},
  {0x205F,412,1},
  {0x2070,413,1},
  {0x2071,414,1},
  {0x2074,415,1},
  {0x2075,416,1},
  {0x2076,417,1},
  {0x2077,418,1},
  {0x2078,419,1},
  {0x2079,420,1},
  {0x207A,421,1},
  {0x207B,422,1},
  {0x207C,423,1},
  {0x207D,424,1},
  {0x207E,425,1},
  {0x207F,426,1},
  {0x2080,427,1},
  {0x2081,428,1},
  {0x2082,429,1},
  {0x2083,430,1},
  {0x2084,431,1},
  {0x2085,432,1},
  {0x2086,433,1},
  {0x2087,434,1},
  {0x2088,435,1},
  {0x2089,436,1},
  {0x208A,437,1},
  {0x208B,438,1},
  {0x208C,439,1},
  {0x208D,440,1},
  {0x208E,441,1},
  {0x2090,442,1},
  {0x2091,443,1},
  {0x2092,444,1},
  {0x2093,445,1},
  {0x2094,446,1},
  {0x2095,447,1},
  {0x2096,448,1},
  {0x2097,449,1},
  {0x2098,450,1},
  {0x2099,451,1},
  {0x209A,452,1},
  {0x209B,453,1},
  {0x209C,454,1},
  {0x20A8,455,2},
  {0x2100,457,3},
  {0x2101,460,3},
  {0x2102,463,1},
  {0x2103,464,2},
  {0x2105,466,3},
  {0x2106,469,3},
  {0x2107,472,1},
  {0x2109,473,2},
  {0x210A,475,1},
  {0x210B,476,1},
  {0x210C,477,1},
  {0x210D,478,1},
  {0x210E,479,1},
  {0x210F,480,1},
  {0x2110,481,1},
  {0x2111,482,1},
  {0x2112,483,1},
  {0x2113,484,1},
  {0x2115,485,1},
  {0x2116,486,2},
  {0x2119,488,1},
  {0x211A,489,1},
  {0x211B,490,1},
  {0x211C,491,1},
  {0x211D,492,1},
  {0x2120,493,2},
  {0x2121,495,3},
  {0x2122,498,2},
  {0x2124,500,1},
  {0x2126,501,1},
  {0x2128,502,1},
  {0x212A,503,1},
  {0x212B,504,1},
  {0x212C,505,1},
  {0x212D,506,1},
  {0x212F,507,1},
  {0x2130,508,1},
  {0x2131,509,1},
  {0x2133,510,1},
  {0x2134,511,1},
  {0x2135,512,1},
  {0x2136,513,1},
  {0x2137,514,1},
  {0x2138,515,1},
  {0x2139,516,1},
  {0x213B,517,3},
  {0x213C,520,1},
  {0x213D,521,1},
  {0x213E,522,1},
  {0x213F,523,1},
  {0x2140,524,1},
  {0x2145,525,1},
  {0x2146,526,1},
  {0x2147,527,1},
  {0x2148,528,1},
  {0x2149,529,1},
  {0x2150,530,3},
  {0x2151,533,3},
  {0x2152,536,4},
  {0x2153,540,3},
  {0x2154,543,3},
  {0x2155,546,3},
  {0x2156,549,3},
  {0x2157,552,3},
  {0x2158,555,3},
  {0x2159,558,3},
  {0x215A,561,3},
  {0x215B,564,3},
  {0x215C,567,3},
  {0x215D,570,3},
  {0x215E,573,3},
  {0x215F,576,2},
  {0x2160,578,1},
  {0x2161,579,2},
  {0x2162,581,3},
  {0x2163,584,2},
  {0x2164,586,1},
  {0x2165,587,2},
  {0x2166,589,3},
  {0x2167,592,4},
  {0x2168,596,2},
  {0x2169,598,1},
  {0x216A,599,2},
  {0x216B,601,3},
  {0x216C,604,1},
  {0x216D,605,1},
  {0x216E,606,1},
  {0x216F,607,1},
  {0x2170,608,1},
  {0x2171,609,2},
  {0x2172,611,3},
  {0x2173,614,2},
  {0x2174,616,1},
  {0x2175,617,2},
  {0x2176,619,3},
  {0x2177,622,4},
  {0x2178,626,2},
  {0x2179,628,1},
  {0x217A,629,2},
  {0x217B,631,3},
  {0x217C,634,1},
  {0x217D,635,1},
  {0x217E,636,1},
  {0x217F,637,1},
  {0x2189,638,3},
  {0x222C,641,2},
  {0x222D,643,3},
  {0x222F,646,2},
  {0x2230,648,3},
  {0x2329,651,1},
  {0x232A,652,1},
  {0x2460,653,1},
  {0x2461,654,1},
  {0x2462,655,1},
  {0x2463,656,1},
  {0x2464,657,1},
  {0x2465,658,1},
  {0x2466,659,1},
  {0x2467,660,1},
  {0x2468,661,1},
  {0x2469,662,2},
  {0x246A,664,2},
  {0x246B,666,2},
  {0x246C,668,2},
  {0x246D,670,2},
  {0x246E,672,2},
  {0x246F,674,2},
  {0x2470,676,2},
  {0x2471,678,2},
  {0x2472,680,2},
  {0x2473,682,2},
  {0x2474,684,3},
  {0x2475,687,3},
  {0x2476,690,3},
  {0x2477,693,3},
  {0x2478,696,3},
  {0x2479,699,3},
  {0x247A,702,3},
  {0x247B,705,3},
  {0x247C,708,3},
  {0x247D,711,4},
  {0x247E,715,4},
  {0x247F,719,4},
  {0x2480,723,4},
  {0x2481,727,4},
  {0x2482,731,4},
  {0x2483,735,4},
  {0x2484,739,4},
  {0x2485,743,4},
  {0x2486,747,4},
  {0x2487,751,4},
  {0x2488,755,2},
  {0x2489,757,2},
  {0x248A,759,2},
  {0x248B,761,2},
  {0x248C,763,2},
  {0x248D,765,2},
  {0x248E,767,2},
  {0x248F,769,2},
  {0x2490,771,2},
  {0x2491,773,3},
  {0x2492,776,3},
  {0x2493,779,3},
  {0x2494,782,3},
  {0x2495,785,3},
  {0x2496,788,3},
  {0x2497,791,3},
  {0x2498,794,3},
  {0x2499,797,3},
  {0x249A,800,3},
  {0x249B,803,3},
  {0x249C,806,3},
  {0x249D,809,3},
  {0x249E,812,3},
  {0x249F,815,3},
  {0x24A0,818,3},
  {0x24A1,821,3},
  {0x24A2,824,3},
  {0x24A3,827,3},
  {0x24A4,830,3},
  {0x24A5,833,3},
  {0x24A6,836,3},
  {0x24A7,839,3},
  {0x24A8,842,3},
  {0x24A9,845,3},
  {0x24AA,848,3},
  {0x24AB,851,3},
  {0x24AC,854,3},
  {0x24AD,857,3},
  {0x24AE,860,3},
  {0x24AF,863,3},
  {0x24B0,866,3},
  {0x24B1,869,3},
  {0x24B2,872,3},
  {0x24B3,875,3},
  {0x24B4,878,3},
  {0x24B5,881,3},
  {0x24B6,884,1},
  {0x24B7,885,1},
  {0x24B8,886,1},
  {0x24B9,887,1},
  {0x24BA,888,1},
  {0x24BB,889,1},
  {0x24BC,890,1},
  {0x24BD,891,1},
  {0x24BE,892,1},
  {0x24BF,893,1},
  {0x24C0,894,1},
  {0x24C1,895,1},
  {0x24C2,896,1},
  {0x24C3,897,1},
  {0x24C4,898,1},
  {0x24C5,899,1},
  {0x24C6,900,1},
  {0x24C7,901,1},
  {0x24C8,902,1},
  {0x24C9,903,1},
  {0x24CA,904,1},
  {0x24CB,905,1},
  {0x24CC,906,1},
  {0x24CD,907,1},
  {0x24CE,908,1},
  {0x24CF,909,1},
  {0x24D0,910,1},
  {0x24D1,911,1},
  {0x24D2,912,1},
  {0x24D3,913,1},
  {0x24D4,914,1},
  {0x24D5,915,1},
  {0x24D6,916,1},
  {0x24D7,917,1},
  {0x24D8,918,1},
  {0x24D9,919,1},
  {0x24DA,920,1},
  {0x24DB,921,1},
  {0x24DC,922,1},
  {0x24DD,923,1},
  {0x24DE,924,1},
  {0x24DF,925,1},
  {0x24E0,926,1},
  {0x24E1,927,1},
  {0x24E2,928,1},
  {0x24E3,929,1},
  {0x24E4,930,1},
  {0x24E5,931,1},
  {0x24E6,932,1},
  {0x24E7,933,1},
  {0x24E8,934,1},
  {0x24E9,935,1},
  {0x24EA,936,1},
  {0x2A0C,937,4},
  {0x2A74,941,3},
  {0x2A75,944,2},
  {0x2A76,946,3},
  {0x2ADC,949,2},
  {0x2C7C,951,1},
  {0x2C7D,952,1},
  {0x2D6F,953,1},
  {0x2E9F,954,1},
  {0x2EF3,955,1},
  {0x2F00,956,1},
  {0x2F01,957,1},
  {0x2F02,958,1},
  {0x2F03,959,1},
  {0x2F04,960,1},
  {0x2F05,961,1},
  {0x2F06,962,1},
  {0x2F07,963,1},
  {0x2F08,964,1},
  {0x2F09,965,1},
  {0x2F0A,966,1},
  {0x2F0B,967,1},
  {0x2F0C,968,1},
  {0x2F0D,969,1},
  {0x2F0E,970,1},
  {0x2F0F,971,1},
  {0x2F10,972,1},
  {0x2F11,973,1},
  {0x2F12,974,1},
  {0x2F13,975,1},
  {0x2F14,976,1},
  {0x2F15,977,1},
  {0x2F16,978,1},
  {0x2F17,979,1},
  {0x2F18,980,1},
  {0x2F19,981,1},
  {0x2F1A,982,1},
  {0x2F1B,983,1},
  {0x2F1C,984,1},
  {0x2F1D,985,1},
  {0x2F1E,986,1},
  {0x2F1F,987,1},
  {0x2F20,988,1},
  {0x2F21,989,1},
  {0x2F22,990,1},
  {0x2F23,991,1},
  {0x2F24,992,1},
  {0x2F25,993,1},
  {0x2F26,994,1},
  {0x2F27,995,1},
  {0x2F28,996,1},
  {0x2F29,997,1},
  {0x2F2A,998,1},
  {0x2F2B,999,1},
  {0x2F2C,1000,1},
  {0x2F2D,1001,1},
  {0x2F2E,1002,1},
  {0x2F2F,1003,1},
  {0x2F30,1004,1},
  {0x2F31,1005,1},
  {0x2F32,1006,1},
  {0x2F33,1007,1},
  {0x2F34,1008,1},
  {0x2F35,1009,1},
  {0x2F36,1010,1},
  {0x2F37,1011,1},
  {0x2F38,1012,1},
  {0x2F39,1013,1},
  {0x2F3A,1014,1},
  {0x2F3B,1015,1},
  {0x2F3C,1016,1},
  {0x2F3D,1017,1},
  {0x2F3E,1018,1},
  {0x2F3F,1019,1},
  {0x2F40,1020,1},
  {0x2F41,1021,1},
  {0x2F42,1022,1},
  {0x2F43,1023,1},
  {0x2F44,1024,1},
  {0x2F45,1025,1},
  {0x2F46,1026,1},
  {0x2F47,1027,1},
  {0x2F48,1028,1},
  {0x2F49,1029,1},
  {0x2F4A,1030,1},
  {0x2F4B,1031,1},
  {0x2F4C,1032,1},
  {0x2F4D,1033,1},
  {0x2F4E,1034,1},
  {0x2F4F,1035,1},
  {0x2F50,1036,1},
  {0x2F51,1037,1},
  {0x2F52,1038,1},
  {0x2F53,1039,1},
  {0x2F54,1040,1},
  {0x2F55,1041,1},
  {0x2F56,1042,1},
  {0x2F57,1043,1},
  {0x2F58,1044,1},
  {0x2F59,1045,1},
  {0x2F5A,1046,1},
  {0x2F5B,1047,1},
  {0x2F5C,1048,1},
  {0x2F5D,1049,1},
  {0x2F5E,1050,1},
  {0x2F5F,1051,1},
  {0x2F60,1052,1},
  {0x2F61,1053,1},
  {0x2F62,1054,1},
  {0x2F63,1055,1},
  {0x2F64,1056,1},
  {0x2F65,1057,1},
  {0x2F66,1058,1},
  {0x2F67,1059,1},
  {0x2F68,1060,1},
  {0x2F69,1061,1},
  {0x2F6A,1062,1},
  {0x2F6B,1063,1},
  {0x2F6C,1064,1},
  {0x2F6D,1065,1},
  {0x2F6E,1066,1},
  {0x2F6F,1067,1},
  {0x2F70,1068,1},
  {0x2F71,1069,1},
  {0x2F72,1070,1},
  {0x2F73,1071,1},
  {0x2F74,1072,1},
  {0x2F75,1073,1},
  {0x2F76,1074,1},
  {0x2F77,1075,1},
  {0x2F78,1076,1},
  {0x2F79,1077,1},
  {0x2F7A,1078,1},
  {0x2F7B,1079,1},
  {0x2F7C,1080,1},
  {0x2F7D,1081,1},
  {0x2F7E,1082,1},
  {0x2F7F,1083,1},
  {0x2F80,1084,1},
  {0x2F81,1085,1},
  {0x2F82,1086,1},
  {0x2F83,1087,1},
  {0x2F84,1088,1},
  {0x2F85,1089,1},
  {0x2F86,1090,1},
  {0x2F87,1091,1},
  {0x2F88,1092,1},
  {0x2F89,1093,1},
  {0x2F8A,1094,1},
  {0x2F8B,1095,1},
  {0x2F8C,1096,1},
  {0x2F8D,1097,1},
  {0x2F8E,1098,1},
  {0x2F8F,1099,1},
  {0x2F90,1100,1},
  {0x2F91,1101,1},
  {0x2F92,1102,1},
  {0x2F93,1103,1},
  {0x2F94,1104,1},
  {0x2F95,1105,1},
  {0x2F96,1106,1},
  {0x2F97,1107,1},
  {0x2F98,1108,1},
  {0x2F99,1109,1},
  {0x2F9A,1110,1},
  {0x2F9B,1111,1},
  {0x2F9C,1112,1},
  {0x2F9D,1113,1},
  {0x2F9E,1114,1},
  {0x2F9F,1115,1},
  {0x2FA0,1116,1},
  {0x2FA1,1117,1},
  {0x2FA2,1118,1},
  {0x2FA3,1119,1},
  {0x2FA4,1120,1},
  {0x2FA5,1121,1},
  {0x2FA6,1122,1},
  {0x2FA7,1123,1},
  {0x2FA8,1124,1},
  {0x2FA9,1125,1},
  {0x2FAA,1126,1},
  {0x2FAB,1127,1},
  {0x2FAC,1128,1},
  {0x2FAD,1129,1},
  {0x2FAE,1130,1},
  {0x2FAF,1131,1},
  {0x2FB0,1132,1},
  {0x2FB1,1133,1},
  {0x2FB2,1134,1},
  {0x2FB3,1135,1},
  {0x2FB4,1136,1},
  {0x2FB5,1137,1},
  {0x2FB6,1138,1},
  {0x2FB7,1139,1},
  {0x2FB8,1140,1},
  {0x2FB9,1141,1},
  {0x2FBA,1142,1},
  {0x2FBB,1143,1},
  {0x2FBC,1144,1},
  {0x2FBD,1145,1},
  {0x2FBE,1146,1},
  {0x2FBF,1147,1},
  {0x2FC0,1148,1},
  {0x2FC1,1149,1},
  {0x2FC2,1150,1},
  {0x2FC3,1151,1},
  {0x2FC4,1152,1},
  {0x2FC5,1153,1},
  {0x2FC6,1154,1},
  {0x2FC7,1155,1},
  {0x2FC8,1156,1},
  {0x2FC9,1157,1},
  {0x2FCA,1158,1},
  {0x2FCB,1159,1},
  {0x2FCC,1160,1},
  {0x2FCD,1161,1},
  {0x2FCE,1162,1},
  {0x2FCF,1163,1},
  {0x2FD0,1164,1},
  {0x2FD1,1165,1},
  {0x2FD2,1166,1},
  {0x2FD3,1167,1},
  {0x2FD4,1168,1},
  {0x2FD5,1169,1},
  {0x3000,1170,1},
  {0x3036,1171,1},
  {0x3038,1172,1},
  {0x3039,1173,1},
  {0x303A,1174,1},
  {0x309B,1175,2},
  {0x309C,1177,2},
  {0x309F,1179,2},
  {0x30FF,1181,2},
  {0x3131,1183,1},
  {0x3132,1184,1},
  {0x3133,1185,1},
  {0x3134,1186,1},
  {0x3135,1187,1},
  {0x3136,1188,1},
  {0x3137,1189,1},
  {0x3138,1190,1},
  {0x3139,1191,1},
  {0x313A,1192,1},
  {0x313B,1193,1},
  {0x313C,1194,1},
  {0x313D,1195,1},
  {0x313E,1196,1},
  {0x313F,1197,1},
  {0x3140,1198,1},
  {0x3141,1199,1},
  {0x3142,1200,1},
  {0x3143,1201,1},
  {0x3144,1202,1},
  {0x3145,1203,1},
  {0x3146,1204,1},
  {0x3147,1205,1},
  {0x3148,1206,1},
  {0x3149,1207,1},
  {0x314A,1208,1},
  {0x314B,1209,1},
  {0x314C,1210,1},
  {0x314D,1211,1},
  {0x314E,1212,1},
  {0x314F,1213,1},
  {0x3150,1214,1},
  {0x3151,1215,1},
  {0x3152,1216,1},
  {0x3153,1217,1},
  {0x3154,1218,1},
  {0x3155,1219,1},
  {0x3156,1220,1},
  {0x3157,1221,1},
  {0x3158,1222,1},
  {0x3159,1223,1},
  {0x315A,1224,1},
  {0x315B,1225,1},
  {0x315C,1226,1},
  {0x315D,1227,1},
  {0x315E,1228,1},
  {0x315F,1229,1},
  {0x3160,1230,1},
  {0x3161,1231,1},
  {0x3162,1232,1},
  {0x3163,1233,1},
  {0x3164,1234,1},
  {0x3165,1235,1},
  {0x3166,1236,1},
  {0x3167,1237,1},
  {0x3168,1238,1},
  {0x3169,1239,1},
  {0x316A,1240,1},
  {0x316B,1241,1},
  {0x316C,1242,1},
  {0x316D,1243,1},
  {0x316E,1244,1},
  {0x316F,1245,1},
  {0x3170,1246,1},
  {0x3171,1247,1},
  {0x3172,1248,1},
  {0x3173,1249,1},
  {0x3174,1250,1},
  {0x3175,1251,1},
  {0x3176,1252,1},
  {0x3177,1253,1},
  {0x3178,1254,1},
  {0x3179,1255,1},
  {0x317A,1256,1},
  {0x317B,1257,1},
  {0x317C,1258,1},
  {0x317D,1259,1},
  {0x317E,1260,1},
  {0x317F,1261,1},
  {0x3180,1262,1},
  {0x3181,1263,1},
  {0x3182,1264,1},
  {0x3183,1265,1},
  {0x3184,1266,1},
  {0x3185,1267,1},
  {0x3186,1268,1},
  {0x3187,1269,1},
  {0x3188,1270,1},
  {0x3189,1271,1},
  {0x318A,1272,1},
  {0x318B,1273,1},
  {0x318C,1274,1},
  {0x318D,1275,1},
  {0x318E,1276,1},
  {0x3192,1277,1},
  {0x3193,1278,1},
  {0x3194,1279,1},
  {0x3195,1280,1},
  {0x3196,1281,1},
  {0x3197,1282,1},
  {0x3198,1283,1},
  {0x3199,1284,1},
  {0x319A,1285,1},
  {0x319B,1286,1},
  {0x319C,1287,1},
  {0x319D,1288,1},
  {0x319E,1289,1},
  {0x319F,1290,1},
  {0x3200,1291,3},
  {0x3201,1294,3},
  {0x3202,1297,3},
  {0x3203,1300,3},
  {0x3204,1303,3},
  {0x3205,1306,3},
  {0x3206,1309,3},
  {0x3207,1312,3},
  {0x3208,1315,3},
  {0x3209,1318,3},
  {0x320A,1321,3},
  {0x320B,1324,3},
  {0x320C,1327,3},
  {0x320D,1330,3},
  {0x320E,1333,3},
  {0x320F,1336,3},
  {0x3210,1339,3},
  {0x3211,1342,3},
  {0x3212,1345,3},
  {0x3213,1348,3},
  {0x3214,1351,3},
  {0x3215,1354,3},
  {0x3216,1357,3},
  {0x3217,1360,3},
  {0x3218,1363,3},
  {0x3219,1366,3},
  {0x321A,1369,3},
  {0x321B,1372,3},
  {0x321C,1375,3},
  {0x321D,1378,4},
  {0x321E,1382,4},
  {0x3220,1386,3},
  {0x3221,1389,3},
  {0x3222,1392,3},
  {0x3223,1395,3},
  {0x3224,1398,3},
  {0x3225,1401,3},
  {0x3226,1404,3},
  {0x3227,1407,3},
  {0x3228,1410,3},
  {0x3229,1413,3},
  {0x322A,1416,3},
  {0x322B,1419,3},
  {0x322C,1422,3},
  {0x322D,1425,3},
  {0x322E,1428,3},
  {0x322F,1431,3},
  {0x3230,1434,3},
  {0x3231,1437,3},
  {0x3232,1440,3},
  {0x3233,1443,3},
  {0x3234,1446,3},
  {0x3235,1449,3},
  {0x3236,1452,3},
  {0x3237,1455,3},
  {0x3238,1458,3},
  {0x3239,1461,3},
  {0x323A,1464,3},
  {0x323B,1467,3},
  {0x323C,1470,3},
  {0x323D,1473,3},
  {0x323E,1476,3},
  {0x323F,1479,3},
  {0x3240,1482,3},
  {0x3241,1485,3},
  {0x3242,1488,3},
  {0x3243,1491,3},
  {0x3244,1494,1},
  {0x3245,1495,1},
  {0x3246,1496,1},
  {0x3247,1497,1},
  {0x3250,1498,3},
  {0x3251,1501,2},
  {0x3252,1503,2},
  {0x3253,1505,2},
  {0x3254,1507,2},
  {0x3255,1509,2},
  {0x3256,1511,2},
  {0x3257,1513,2},
  {0x3258,1515,2},
  {0x3259,1517,2},
  {0x325A,1519,2},
  {0x325B,1521,2},
  {0x325C,1523,2},
  {0x325D,1525,2},
  {0x325E,1527,2},
  {0x325F,1529,2},
  {0x3260,1531,1},
  {0x3261,1532,1},
  {0x3262,1533,1},
  {0x3263,1534,1},
  {0x3264,1535,1},
  {0x3265,1536,1},
  {0x3266,1537,1},
  {0x3267,1538,1},
  {0x3268,1539,1},
  {0x3269,1540,1},
  {0x326A,1541,1},
  {0x326B,1542,1},
  {0x326C,1543,1},
  {0x326D,1544,1},
  {0x326E,1545,1},
  {0x326F,1546,1},
  {0x3270,1547,1},
  {0x3271,1548,1},
  {0x3272,1549,1},
  {0x3273,1550,1},
  {0x3274,1551,1},
  {0x3275,1552,1},
  {0x3276,1553,1},
  {0x3277,1554,1},
  {0x3278,1555,1},
  {0x3279,1556,1},
  {0x327A,1557,1},
  {0x327B,1558,1},
  {0x327C,1559,2},
  {0x327D,1561,2},
  {0x327E,1563,1},
  {0x3280,1564,1},
  {0x3281,1565,1},
  {0x3282,1566,1},
  {0x3283,1567,1},
  {0x3284,1568,1},
  {0x3285,1569,1},
  {0x3286,1570,1},
  {0x3287,1571,1},
  {0x3288,1572,1},
  {0x3289,1573,1},
  {0x328A,1574,1},
  {0x328B,1575,1},
  {0x328C,1576,1},
  {0x328D,1577,1},
  {0x328E,1578,1},
  {0x328F,1579,1},
  {0x3290,1580,1},
  {0x3291,1581,1},
  {0x3292,1582,1},
  {0x3293,1583,1},
  {0x3294,1584,1},
  {0x3295,1585,1},
  {0x3296,1586,1},
  {0x3297,1587,1},
  {0x3298,1588,1},
  {0x3299,1589,1},
  {0x329A,1590,1},
  {0x329B,1591,1},
  {0x329C,1592,1},
  {0x329D,1593,1},
  {0x329E,1594,1},
  {0x329F,1595,1},
  {0x32A0,1596,1},
  {0x32A1,1597,1},
  {0x32A2,1598,1},
  {0x32A3,1599,1},
  {0x32A4,1600,1},
  {0x32A5,1601,1},
  {0x32A6,1602,1},
  {0x32A7,1603,1},
  {0x32A8,1604,1},
  {0x32A9,1605,1},
  {0x32AA,1606,1},
  {0x32AB,1607,1},
  {0x32AC,1608,1},
  {0x32AD,1609,1},
  {0x32AE,1610,1},
  {0x32AF,1611,1},
  {0x32B0,1612,1},
  {0x32B1,1613,2},
  {0x32B2,1615,2},
  {0x32B3,1617,2},
  {0x32B4,1619,2},
  {0x32B5,1621,2},
  {0x32B6,1623,2},
  {0x32B7,1625,2},
  {0x32B8,1627,2},
  {0x32B9,1629,2},
  {0x32BA,1631,2},
  {0x32BB,1633,2},
  {0x32BC,1635,2},
  {0x32BD,1637,2},
  {0x32BE,1639,2},
  {0x32BF,1641,2},
  {0x32C0,1643,2},
  {0x32C1,1645,2},
  {0x32C2,1647,2},
  {0x32C3,1649,2},
  {0x32C4,1651,2},
  {0x32C5,1653,2},
  {0x32C6,1655,2},
  {0x32C7,1657,2},
  {0x32C8,1659,2},
  {0x32C9,1661,3},
  {0x32CA,1664,3},
  {0x32CB,1667,3},
  {0x32CC,1670,2},
  {0x32CD,1672,3},
  {0x32CE,1675,2},
  {0x32CF,1677,3},
  {0x32D0,1680,1},
  {0x32D1,1681,1},
  {0x32D2,1682,1},
  {0x32D3,1683,1},
  {0x32D4,1684,1},
  {0x32D5,1685,1},
  {0x32D6,1686,1},
  {0x32D7,1687,1},
  {0x32D8,1688,1},
  {0x32D9,1689,1},
  {0x32DA,1690,1},
  {0x32DB,1691,1},
  {0x32DC,1692,1},
  {0x32DD,1693,1},
  {0x32DE,1694,1},
  {0x32DF,1695,1},
  {0x32E0,1696,1},
  {0x32E1,1697,1},
  {0x32E2,1698,1},
  {0x32E3,1699,1},
  {0x32E4,1700,1},
  {0x32E5,1701,1},
  {0x32E6,1702,1},
  {0x32E7,1703,1},
  {0x32E8,1704,1},
  {0x32E9,1705,1},
  {0x32EA,1706,1},
  {0x32EB,1707,1},
  {0x32EC,1708,1},
  {0x32ED,1709,1},
  {0x32EE,1710,1},
  {0x32EF,1711,1},
  {0x32F0,1712,1},
  {0x32F1,1713,1},
  {0x32F2,1714,1},
  {0x32F3,1715,1},
  {0x32F4,1716,1},
  {0x32F5,1717,1},
  {0x32F6,1718,1},
  {0x32F7,1719,1},
  {0x32F8,1720,1},
  {0x32F9,1721,1},
  {0x32FA,1722,1},
  {0x32FB,1723,1},
  {0x32FC,1724,1},
  {0x32FD,1725,1},
  {0x32FE,1726,1},
  {0x32FF,1727,2},
  {0x3300,1729,4},
  {0x3301,1733,4},
  {0x3302,1737,4},
  {0x3303,1741,3},
  {0x3304,1744,4},
  {0x3305,1748,3},
  {0x3306,1751,3},
  {0x3307,1754,5},
  {0x3308,1759,4},
  {0x3309,1763,3},
  {0x330A,1766,3},
  {0x330B,1769,3},
  {0x330C,1772,4},
  {0x330D,1776,4},
  {0x330E,1780,3},
  {0x330F,1783,3},
  {0x3310,1786,2},
  {0x3311,1788,3},
  {0x3312,1791,4},
  {0x3313,1795,4},
  {0x3314,1799,2},
  {0x3315,1801,5},
  {0x3316,1806,6},
  {0x3317,1812,5},
  {0x3318,1817,3},
  {0x3319,1820,5},
  {0x331A,1825,5},
  {0x331B,1830,4},
  {0x331C,1834,3},
  {0x331D,1837,3},
  {0x331E,1840,3},
  {0x331F,1843,4},
  {0x3320,1847,5},
  {0x3321,1852,4},
  {0x3322,1856,3},
  {0x3323,1859,3},
  {0x3324,1862,3},
  {0x3325,1865,2},
  {0x3326,1867,2},
  {0x3327,1869,2},
  {0x3328,1871,2},
  {0x3329,1873,3},
  {0x332A,1876,3},
  {0x332B,1879,5},
  {0x332C,1884,3},
  {0x332D,1887,4},
  {0x332E,1891,5},
  {0x332F,1896,3},
  {0x3330,1899,2},
  {0x3331,1901,2},
  {0x3332,1903,5},
  {0x3333,1908,4},
  {0x3334,1912,5},
  {0x3335,1917,3},
  {0x3336,1920,5},
  {0x3337,1925,2},
  {0x3338,1927,3},
  {0x3339,1930,3},
  {0x333A,1933,3},
  {0x333B,1936,3},
  {0x333C,1939,3},
  {0x333D,1942,4},
  {0x333E,1946,3},
  {0x333F,1949,2},
  {0x3340,1951,3},
  {0x3341,1954,3},
  {0x3342,1957,3},
  {0x3343,1960,4},
  {0x3344,1964,3},
  {0x3345,1967,3},
  {0x3346,1970,3},
  {0x3347,1973,5},
  {0x3348,1978,4},
  {0x3349,1982,2},
  {0x334A,1984,5},
  {0x334B,1989,2},
  {0x334C,1991,4},
  {0x334D,1995,4},
  {0x334E,1999,3},
  {0x334F,2002,3},
  {0x3350,2005,3},
  {0x3351,2008,4},
  {0x3352,2012,2},
  {0x3353,2014,3},
  {0x3354,2017,4},
  {0x3355,2021,2},
  {0x3356,2023,5},
  {0x3357,2028,3},
  {0x3358,2031,2},
  {0x3359,2033,2},
  {0x335A,2035,2},
  {0x335B,2037,2},
  {0x335C,2039,2},
  {0x335D,2041,2},
  {0x335E,2043,2},
  {0x335F,2045,2},
  {0x3360,2047,2},
  {0x3361,2049,2},
  {0x3362,2051,3},
  {0x3363,2054,3},
  {0x3364,2057,3},
  {0x3365,2060,3},
  {0x3366,2063,3},
  {0x3367,2066,3},
  {0x3368,2069,3},
  {0x3369,2072,3},
  {0x336A,2075,3},
  {0x336B,2078,3},
  {0x336C,2081,3},
  {0x336D,2084,3},
  {0x336E,2087,3},
  {0x336F,2090,3},
  {0x3370,2093,3},
  {0x3371,2096,3},
  {0x3372,2099,2},
  {0x3373,2101,2},
  {0x3374,2103,3},
  {0x3375,2106,2},
  {0x3376,2108,2},
  {0x3377,2110,2},
  {0x3378,2112,3},
  {0x3379,2115,3},
  {0x337A,2118,2},
  {0x337B,2120,2},
  {0x337C,2122,2},
  {0x337D,2124,2},
  {0x337E,2126,2},
  {0x337F,2128,4},
  {0x3380,2132,2},
  {0x3381,2134,2},
  {0x3382,2136,2},
  {0x3383,2138,2},
  {0x3384,2140,2},
  {0x3385,2142,2},
  {0x3386,2144,2},
  {0x3387,2146,2},
  {0x3388,2148,3},
  {0x3389,2151,4},
  {0x338A,2155,2},
  {0x338B,2157,2},
  {0x338C,2159,2},
  {0x338D,2161,2},
  {0x338E,2163,2},
  {0x338F,2165,2},
  {0x3390,2167,2},
  {0x3391,2169,3},
  {0x3392,2172,3},
  {0x3393,2175,3},
  {0x3394,2178,3},
  {0x3395,2181,2},
  {0x3396,2183,2},
  {0x3397,2185,2},
  {0x3398,2187,2},
  {0x3399,2189,2},
  {0x339A,2191,2},
  {0x339B,2193,2},
  {0x339C,2195,2},
  {0x339D,2197,2},
  {0x339E,2199,2},
  {0x339F,2201,3},
  {0x33A0,2204,3},
  {0x33A1,2207,2},
  {0x33A2,2209,3},
  {0x33A3,2212,3},
  {0x33A4,2215,3},
  {0x33A5,2218,2},
  {0x33A6,2220,3},
  {0x33A7,2223,3},
  {0x33A8,2226,4},
  {0x33A9,2230,2},
  {0x33AA,2232,3},
  {0x33AB,2235,3},
  {0x33AC,2238,3},
  {0x33AD,2241,3},
  {0x33AE,2244,5},
  {0x33AF,2249,6},
  {0x33B0,2255,2},
  {0x33B1,2257,2},
  {0x33B2,2259,2},
  {0x33B3,2261,2},
  {0x33B4,2263,2},
  {0x33B5,2265,2},
  {0x33B6,2267,2},
  {0x33B7,2269,2},
  {0x33B8,2271,2},
  {0x33B9,2273,2},
  {0x33BA,2275,2},
  {0x33BB,2277,2},
  {0x33BC,2279,2},
  {0x33BD,2281,2},
  {0x33BE,2283,2},
  {0x33BF,2285,2},
  {0x33C0,2287,2},
  {0x33C1,2289,2},
  {0x33C2,2291,4},
  {0x33C3,2295,2},
  {0x33C4,2297,2},
  {0x33C5,2299,2},
  {0x33C6,2301,4},
  {0x33C7,2305,3},
  {0x33C8,2308,2},
  {0x33C9,2310,2},
  {0x33CA,2312,2},
  {0x33CB,2314,2},
  {0x33CC,2316,2},
  {0x33CD,2318,2},
  {0x33CE,2320,2},
  {0x33CF,2322,2},
  {0x33D0,2324,2},
  {0x33D1,2326,2},
  {0x33D2,2328,3},
  {0x33D3,2331,2},
  {0x33D4,2333,2},
  {0x33D5,2335,3},
  {0x33D6,2338,3},
  {0x33D7,2341,2},
  {0x33D8,2343,4},
  {0x33D9,2347,3},
  {0x33DA,2350,2},
  {0x33DB,2352,2},
  {0x33DC,2354,2},
  {0x33DD,2356,2},
  {0x33DE,2358,3},
  {0x33DF,2361,3},
  {0x33E0,2364,2},
  {0x33E1,2366,2},
  {0x33E2,2368,2},
  {0x33E3,2370,2},
  {0x33E4,2372,2},
  {0x33E5,2374,2},
  {0x33E6,2376,2},
  {0x33E7,2378,2},
  {0x33E8,2380,2},
  {0x33E9,2382,3},
  {0x33EA,2385,3},
  {0x33EB,2388,3},
  {0x33EC,2391,3},
  {0x33ED,2394,3},
  {0x33EE,2397,3},
  {0x33EF,2400,3},
  {0x33F0,2403,3},
  {0x33F1,2406,3},
  {0x33F2,2409,3},
  {0x33F3,2412,3},
  {0x33F4,2415,3},
  {0x33F5,2418,3},
  {0x33F6,2421,3},
  {0x33F7,2424,3},
  {0x33F8,2427,3},
  {0x33F9,2430,3},
  {0x33FA,2433,3},
  {0x33FB,2436,3},
  {0x33FC,2439,3},
  {0x33FD,2442,3},
  {0x33FE,2445,3},
  {0x33FF,2448,3},
  {0xA69C,2451,1},
  {0xA69D,2452,1},
  {0xA770,2453,1},
  {0xA7F8,2454,1},
  {0xA7F9,2455,1},
  {0xAB5C,2456,1},
  {0xAB5D,2457,1},
  {0xAB5E,2458,1},
  {0xAB5F,2459,1},
  {0xAB69,2460,1},
  {0xF900,2461,1},
  {0xF901,2462,1},
  {0xF902,2463,1},
  {0xF903,2464,1},
  {0xF904,2465,1},
  {0xF905,2466,1},
  {0xF906,2467,1},
  {0xF907,2468,1},
  {0xF908,2469,1},
  {0xF909,2470,1},
  {0xF90A,2471,1},
  {0xF90B,2472,1},
  {0xF90C,2473,1},
  {0xF90D,2474,1},
  {0xF90E,2475,1},
  {0xF90F,2476,1},
  {0xF910,2477,1},
  {0xF911,2478,1},
  {0xF912,2479,1},
  {0xF913,2480,1},
  {0xF914,2481,1},
  {0xF915,2482,1},
  {0xF916,2483,1},
  {0xF917,2484,1},
  {0xF918,2485,1},
  {0xF919,2486,1},
  {0xF91A,2487,1},
  {0xF91B,2488,1},
  {0xF91C,2489,1},
  {0xF91D,2490,1},
  {0xF91E,2491,1},
  {0xF91F,2492,1},
  {0xF920,2493,1},
  {0xF921,2494,1},
  {0xF922,2495,1},
  {0xF923,2496,1},
  {0xF924,2497,1},
  {0xF925,2498,1},
  {0xF926,2499,1},
  {0xF927,2500,1},
  {0xF928,2501,1},
  {0xF929,2502,1},
  {0xF92A,2503,1},
  {0xF92B,2504,1},
  {0xF92C,2505,1},
  {0xF92D,2506,1},
  {0xF92E,2507,1},
  {0xF92F,2508,1},
  {0xF930,2509,1},
  {0xF931,2510,1},
  {0xF932,2511,1},
  {0xF933,2512,1},
  {0xF934,2513,1},
  {0xF935,2514,1},
  {0xF936,2515,1},
  {0xF937,2516,1},
  {0xF938,2517,1},
  {0xF939,2518,1},
  {0xF93A,2519,1},
  {0xF93B,2520,1},
  {0xF93C,2521,1},
  {0xF93D,2522,1},
  {0xF93E,2523,1},
  {0xF93F,2524,1},
  {0xF940,2525,1},
  {0xF941,2526,1},
  {0xF942,2527,1},
  {0xF943,2528,1},
  {0xF944,2529,1},
  {0xF945,2530,1},
  {0xF946,2531,1},
  {0xF947,2532,1},
  {0xF948,2533,1},
  {0xF949,2534,1},
  {0xF94A,2535,1},
  {0xF94B,2536,1},
  {0xF94C,2537,1},
  {0xF94D,2538,1},
  {0xF94E,2539,1},
  {0xF94F,2540,1},
  {0xF950,2541,1},
  {0xF951,2542,1},
  {0xF952,2543,1},
  {0xF953,2544,1},
  {0xF954,2545,1},
  {0xF955,2546,1},
  {0xF956,2547,1},
  {0xF957,2548,1},
  {0xF958,2549,1},
  {0xF959,2550,1},
  {0xF95A,2551,1},
  {0xF95B,2552,1},
  {0xF95C,2553,1},
  {0xF95D,2554,1},
  {0xF95E,2555,1},
  {0xF95F,2556,1},
  {0xF960,2557,1},
  {0xF961,2558,1},
  {0xF962,2559,1},
  {0xF963,2560,1},
  {0xF964,2561,1},
  {0xF965,2562,1},
  {0xF966,2563,1},
  {0xF967,2564,1},
  {0xF968,2565,1},
  {0xF969,2566,1},
  {0xF96A,2567,1},
  {0xF96B,2568,1},
  {0xF96C,2569,1},
  {0xF96D,2570,1},
  {0xF96E,2571,1},
  {0xF96F,2572,1},
  {0xF970,2573,1},
  {0xF971,2574,1},
  {0xF972,2575,1},
  {0xF973,2576,1},
  {0xF974,2577,1},
  {0xF975,2578,1},
  {0xF976,2579,1},
  {0xF977,2580,1},
  {0xF978,2581,1},
  {0xF979,2582,1},
  {0xF97A,2583,1},
  {0xF97B,2584,1},
  {0xF97C,2585,1},
  {0xF97D,2586,1},
  {0xF97E,2587,1},
  {0xF97F,2588,1},
  {0xF980,2589,1},
  {0xF981,2590,1},
  {0xF982,2591,1},
  {0xF983,2592,1},
  {0xF984,2593,1},
  {0xF985,2594,1},
  {0xF986,2595,1},
  {0xF987,2596,1},
  {0xF988,2597,1},
  {0xF989,2598,1},
  {0xF98A,2599,1},
  {0xF98B,2600,1},
  {0xF98C,2601,1},
  {0xF98D,2602,1},
  {0xF98E,2603,1},
  {0xF98F,2604,1},
  {0xF990,2605,1},
  {0xF991,2606,1},
  {0xF992,2607,1},
  {0xF993,2608,1},
  {0xF994,2609,1},
  {0xF995,2610,1},
  {0xF996,2611,1},
  {0xF997,2612,1},
  {0xF998,2613,1},
  {0xF999,2614,1},
  {0xF99A,2615,1},
  {0xF99B,2616,1},
  {0xF99C,2617,1},
  {0xF99D,2618,1},
  {0xF99E,2619,1},
  {0xF99F,2620,1},
  {0xF9A0,2621,1},
  {0xF9A1,2622,1},
  {0xF9A2,2623,1},
  {0xF9A3,2624,1},
  {0xF9A4,2625,1},
  {0xF9A5,2626,1},
  {0xF9A6,2627,1},
  {0xF9A7,2628,1},
  {0xF9A8,2629,1},
  {0xF9A9,2630,1},
  {0xF9AA,2631,1},
  {0xF9AB,2632,1},
  {0xF9AC,2633,1},
  {0xF9AD,2634,1},
  {0xF9AE,2635,1},
  {0xF9AF,2636,1},
  {0xF9B0,2637,1},
  {0xF9B1,2638,1},
  {0xF9B2,2639,1},
  {0xF9B3,2640,1},
  {0xF9B4,2641,1},
  {0xF9B5,2642,1},
  {0xF9B6,2643,1},
  {0xF9B7,2644,1},
  {0xF9B8,2645,1},
  {0xF9B9,2646,1},
  {0xF9BA,2647,1},
  {0xF9BB,2648,1},
  {0xF9BC,2649,1},
  {0xF9BD,2650,1},
  {0xF9BE,2651,1},
  {0xF9BF,2652,1},
  {0xF9C0,2653,1},
  {0xF9C1,2654,1},
  {0xF9C2,2655,1},
  {0xF9C3,2656,1},
  {0xF9C4,2657,1},
  {0xF9C5,2658,1},
  {0xF9C6,2659,1},
  {0xF9C7,2660,1},
  {0xF9C8,2661,1},
  {0xF9C9,2662,1},
  {0xF9CA,2663,1},
  {0xF9CB,2664,1},
  {0xF9CC,2665,1},
  {0xF9CD,2666,1},
  {0xF9CE,2667,1},
  {0xF9CF,2668,1},
  {0xF9D0,2669,1},
  {0xF9D1,2670,1},
  {0xF9D2,2671,1},
  {0xF9D3,2672,1},
  {0xF9D4,2673,1},
  {0xF9D5,2674,1},
  {0xF9D6,2675,1},
  {0xF9D7,2676,1},
  {0xF9D8,2677,1},
  {0xF9D9,2678,1},
  {0xF9DA,2679,1},
  {0xF9DB,2680,1},
  {0xF9DC,2681,1},
  {0xF9DD,2682,1},
  {0xF9DE,2683,1},
  {0xF9DF,2684,1},
  {0xF9E0,2685,1},
  {0xF9E1,2686,1},
  {0xF9E2,2687,1},
  {0xF9E3,2688,1},
  {0xF9E4,2689,1},
  {0xF9E5,2690,1},
  {0xF9E6,2691,1},
  {0xF9E7,2692,1},
  {0xF9E8,2693,1},
  {0xF9E9,2694,1},
  {0xF9EA,2695,1},
  {0xF9EB,2696,1},
  {0xF9EC,2697,1},
  {0xF9ED,2698,1},
  {0xF9EE,2699,1},
  {0xF9EF,2700,1},
  {0xF9F0,2701,1},
  {0xF9F1,2702,1},
  {0xF9F2,2703,1},
  {0xF9F3,2704,1},
  {0xF9F4,2705,1},
  {0xF9F5,2706,1},
  {0xF9F6,2707,1},
  {0xF9F7,2708,1},
  {0xF9F8,2709,1},
  {0xF9F9,2710,1},
  {0xF9FA,2711,1},
  {0xF9FB,2712,1},
  {0xF9FC,2713,1},
  {0xF9FD,2714,1},
  {0xF9FE,2715,1},
  {0xF9FF,2716,1},
  {0xFA00,2717,1},
  {0xFA01,2718,1},
  {0xFA02,2719,1},
  {0xFA03,2720,1},
  {0xFA04,2721,1},
  {0xFA05,2722,1},
  {0xFA06,2723,1},
  {0xFA07,2724,1},
  {0xFA08,2725,1},
  {0xFA09,2726,1},
  {0xFA0A,2727,1},
  {0xFA0B,2728,1},
  {0xFA0C,2729,1},
  {0xFA0D,2730,1},
  {0xFA10,2731,1},
  {0xFA12,2732,1},
  {0xFA15,2733,1},
  {0xFA16,2734,1},
  {0xFA17,2735,1},
  {0xFA18,2736,1},
  {0xFA19,2737,1},
  {0xFA1A,2738,1},
  {0xFA1B,2739,1},
  {0xFA1C,2740,1},
  {0xFA1D,2741,1},
  {0xFA1E,2742,1},
  {0xFA20,2743,1},
  {0xFA22,2744,1},
  {0xFA25,2745,1},
  {0xFA26,2746,1},
  {0xFA2A,2747,1},
  {0xFA2B,2748,1},
  {0xFA2C,2749,1},
  {0xFA2D,2750,1},
  {0xFA2E,2751,1},
  {0xFA2F,2752,1},
  {0xFA30,2753,1},
  {0xFA31,2754,1},
  {0xFA32,2755,1},
  {0xFA33,2756,1},
  {0xFA34,2757,1},
  {0xFA35,2758,1},
  {0xFA36,2759,1},
  {0xFA37,2760,1},
  {0xFA38,2761,1},
  {0xFA39,2762,1},
  {0xFA3A,2763,1},
  {0xFA3B,2764,1},
  {0xFA3C,2765,1},
  {0xFA3D,2766,1},
  {0xFA3E,2767,1},
  {0xFA3F,2768,1},
  {0xFA40,2769,1},
  {0xFA41,2770,1},
  {0xFA42,2771,1},
  {0xFA43,2772,1},
  {0xFA44,2773,1},
  {0xFA45,2774,1},
  {0xFA46,2775,1},
  {0xFA47,2776,1},
  {0xFA48,2777,1},
  {0xFA49,2778,1},
  {0xFA4A,2779,1},
  {0xFA4B,2780,1},
  {0xFA4C,2781,1},
  {0xFA4D,2782,1},
  {0xFA4E,2783,1},
  {0xFA4F,2784,1},
  {0xFA50,2785,1},
  {0xFA51,2786,1},
  {0xFA52,2787,1},
  {0xFA53,2788,1},
  {0xFA54,2789,1},
  {0xFA55,2790,1},
  {0xFA56,2791,1},
  {0xFA57,2792,1},
  {0xFA58,2793,1},
  {0xFA59,2794,1},
  {0xFA5A,2795,1},
  {0xFA5B,2796,1},
  {0xFA5C,2797,1},
  {0xFA5D,2798,1},
  {0xFA5E,2799,1},
  {0xFA5F,2800,1},
  {0xFA60,2801,1},
  {0xFA61,2802,1},
  {0xFA62,2803,1},
  {0xFA63,2804,1},
  {0xFA64,2805,1},
  {0xFA65,2806,1},
  {0xFA66,2807,1},
  {0xFA67,2808,1},
  {0xFA68,2809,1},
  {0xFA69,2810,1},
  {0xFA6A,2811,1},
  {0xFA6B,2812,1},
  {0xFA6C,2813,1},
  {0xFA6D,2814,1},
  {0xFA70,2815,1},
  {0xFA71,2816,1},
  {0xFA72,2817,1},
  {0xFA73,2818,1},
  {0xFA74,2819,1},
  {0xFA75,2820,1},
  {0xFA76,2821,1},
  {0xFA77,2822,1},
  {0xFA78,2823,1},
  {0xFA79,2824,1},
  {0xFA7A,2825,1},
  {0xFA7B,2826,1},
  {0xFA7C,2827,1},
  {0xFA7D,2828,1},
  {0xFA7E,2829,1},
  {0xFA7F,2830,1},
  {0xFA80,2831,1},
  {0xFA81,2832,1},
  {0xFA82,2833,1},
  {0xFA83,2834,1},
  {0xFA84,2835,1},
  {0xFA85,2836,1},
  {0xFA86,2837,1},
  {0xFA87,2838,1},
  {0xFA88,2839,1},
  {0xFA89,2840,1},
  {0xFA8A,2841,1},
  {0xFA8B,2842,1},
  {0xFA8C,2843,1},
  {0xFA8D,2844,1},
  {0xFA8E,2845,1},
  {0xFA8F,2846,1},
  {0xFA90,2847,1},
  {0xFA91,2848,1},
  {0xFA92,2849,1},
  {0xFA93,2850,1},
  {0xFA94,2851,1},
  {0xFA95,2852,1},
  {0xFA96,2853,1},
  {0xFA97,2854,1},
  {0xFA98,2855,1},
  {0xFA99,2856,1},
  {0xFA9A,2857,1},
  {0xFA9B,2858,1},
  {0xFA9C,2859,1},
  {0xFA9D,2860,1},
  {0xFA9E,2861,1},
  {0xFA9F,2862,1},
  {0xFAA0,2863,1},
  {0xFAA1,2864,1},
  {0xFAA2,2865,1},
  {0xFAA3,2866,1},
  {0xFAA4,2867,1},
  {0xFAA5,2868,1},
  {0xFAA6,2869,1},
  {0xFAA7,2870,1},
  {0xFAA8,2871,1},
  {0xFAA9,2872,1},
  {0xFAAA,2873,1},
  {0xFAAB,2874,1},
  {0xFAAC,2875,1},
  {0xFAAD,2876,1},
  {0xFAAE,2877,1},
  {0xFAAF,2878,1},
  {0xFAB0,2879,1},
  {0xFAB1,2880,1},
  {0xFAB2,2881,1},
  {0xFAB3,2882,1},
  {0xFAB4,2883,1},
  {0xFAB5,2884,1},
  {0xFAB6,2885,1},
  {0xFAB7,2886,1},
  {0xFAB8,2887,1},
  {0xFAB9,2888,1},
  {0xFABA,2889,1},
  {0xFABB,2890,1},
  {0xFABC,2891,1},
  {0xFABD,2892,1},
  {0xFABE,2893,1},
  {0xFABF,2894,1},
  {0xFAC0,2895,1},
  {0xFAC1,2896,1},
  {0xFAC2,2897,1},
  {0xFAC3,2898,1},
  {0xFAC4,2899,1},
  {0xFAC5,2900,1},
  {0xFAC6,2901,1},
  {0xFAC7,2902,1},
  {0xFAC8,2903,1},
  {0xFAC9,2904,1},
  {0xFACA,2905,1},
  {0xFACB,2906,1},
  {0xFACC,2907,1},
  {0xFACD,2908,1},
  {0xFACE,2909,1},
  {0xFACF,2910,1},
  {0xFAD0,2911,1},
  {0xFAD1,2912,1},
  {0xFAD2,2913,1},
  {0xFAD3,2914,1},
  {0xFAD4,2915,1},
  {0xFAD5,2916,1},
  {0xFAD6,2917,1},
  {0xFAD7,2918,1},
  {0xFAD8,2919,1},
  {0xFAD9,2920,1},
  {0xFB00,2921,2},
  {0xFB01,2923,2},
  {0xFB02,2925,2},
  {0xFB03,2927,3},
  {0xFB04,2930,3},
  {0xFB05,2933,2},
  {0xFB06,2935,2},
  {0xFB13,2937,2},
  {0xFB14,2939,2},
  {0xFB15,2941,2},
  {0xFB16,2943,2},
  {0xFB17,2945,2},
  {0xFB1D,2947,2},
  {0xFB1F,2949,2},
  {0xFB20,2951,1},
  {0xFB21,2952,1},
  {0xFB22,2953,1},
  {0xFB23,2954,1},
  {0xFB24,2955,1},
  {0xFB25,2956,1},
  {0xFB26,2957,1},
  {0xFB27,2958,1},
  {0xFB28,2959,1},
  {0xFB29,2960,1},
  {0xFB2A,2961,2},
  {0xFB2B,2963,2},
  {0xFB2C,2965,3},
  {0xFB2D,2968,3},
  {0xFB2E,2971,2},
  {0xFB2F,2973,2},
  {0xFB30,2975,2},
  {0xFB31,2977,2},
  {0xFB32,2979,2},
  {0xFB33,2981,2},
  {0xFB34,2983,2},
  {0xFB35,2985,2},
  {0xFB36,2987,2},
  {0xFB38,2989,2},
  {0xFB39,2991,2},
  {0xFB3A,2993,2},
  {0xFB3B,2995,2},
  {0xFB3C,2997,2},
  {0xFB3E,2999,2},
  {0xFB40,3001,2},
  {0xFB41,3003,2},
  {0xFB43,3005,2},
  {0xFB44,3007,2},
  {0xFB46,3009,2},
  {0xFB47,3011,2},
  {0xFB48,3013,2},
  {0xFB49,3015,2},
  {0xFB4A,3017,2},
  {0xFB4B,3019,2},
  {0xFB4C,3021,2},
  {0xFB4D,3023,2},
  {0xFB4E,3025,2},
  {0xFB4F,3027,2},
  {0xFB50,3029,1},
  {0xFB51,3030,1},
  {0xFB52,3031,1},
  {0xFB53,3032,1},
  {0xFB54,3033,1},
  {0xFB55,3034,1},
  {0xFB56,3035,1},
  {0xFB57,3036,1},
  {0xFB58,3037,1},
  {0xFB59,3038,1},
  {0xFB5A,3039,1},
  {0xFB5B,3040,1},
  {0xFB5C,3041,1},
  {0xFB5D,3042,1},
  {0xFB5E,3043,1},
  {0xFB5F,3044,1},
  {0xFB60,3045,1},
  {0xFB61,3046,1},
  {0xFB62,3047,1},
  {0xFB63,3048,1},
  {0xFB64,3049,1},
  {0xFB65,3050,1},
  {0xFB66,3051,1},
  {0xFB67,3052,1},
  {0xFB68,3053,1},
  {0xFB69,3054,1},
  {0xFB6A,3055,1},
  {0xFB6B,3056,1},
  {0xFB6C,3057,1},
  {0xFB6D,3058,1},
  {0xFB6E,3059,1},
  {0xFB6F,3060,1},
  {0xFB70,3061,1},
  {0xFB71,3062,1},
  {0xFB72,3063,1},
  {0xFB73,3064,1},
  {0xFB74,3065,1},
  {0xFB75,3066,1},
  {0xFB76,3067,1},
  {0xFB77,3068,1},
  {0xFB78,3069,1},
  {0xFB79,3070,1},
  {0xFB7A,3071,1},
  {0xFB7B,3072,1},
  {0xFB7C,3073,1},
  {0xFB7D,3074,1},
  {0xFB7E,3075,1},
  {0xFB7F,3076,1},
  {0xFB80,3077,1},
  {0xFB81,3078,1},
  {0xFB82,3079,1},
  {0xFB83,3080,1},
  {0xFB84,3081,1},
  {0xFB85,3082,1},
  {0xFB86,3083,1},
  {0xFB87,3084,1},
  {0xFB88,3085,1},
  {0xFB89,3086,1},
  {0xFB8A,3087,1},
  {0xFB8B,3088,1},
  {0xFB8C,3089,1},
  {0xFB8D,3090,1},
  {0xFB8E,3091,1},
  {0xFB8F,3092,1},
  {0xFB90,3093,1},
  {0xFB91,3094,1},
  {0xFB92,3095,1},
  {0xFB93,3096,1},
  {0xFB94,3097,1},
  {0xFB95,3098,1},
  {0xFB96,3099,1},
  {0xFB97,3100,1},
  {0xFB98,3101,1},
  {0xFB99,3102,1},
  {0xFB9A,3103,1},
  {0xFB9B,3104,1},
  {0xFB9C,3105,1},
  {0xFB9D,3106,1},
  {0xFB9E,3107,1},
  {0xFB9F,3108,1},
  {0xFBA0,3109,1},
  {0xFBA1,3110,1},
  {0xFBA2,3111,1},
  {0xFBA3,3112,1},
  {0xFBA4,3113,1},
  {0xFBA5,3114,1},
  {0xFBA6,3115,1},
  {0xFBA7,3116,1},
  {0xFBA8,3117,1},
  {0xFBA9,3118,1},
  {0xFBAA,3119,1},
  {0xFBAB,3120,1},
  {0xFBAC,3121,1},
  {0xFBAD,3122,1},
  {0xFBAE,3123,1},
  {0xFBAF,3124,1},
  {0xFBB0,3125,1},
  {0xFBB1,3126,1},
  {0xFBD3,3127,1},
  {0xFBD4,3128,1},
  {0xFBD5,3129,1},
  {0xFBD6,3130,1},
  {0xFBD7,3131,1},
  {0xFBD8,3132,1},
  {0xFBD9,3133,1},
  {0xFBDA,3134,1},
  {0xFBDB,3135,1},
  {0xFBDC,3136,1},
  {0xFBDD,3137,2},
  {0xFBDE,3139,1},
  {0xFBDF,3140,1},
  {0xFBE0,3141,1},
  {0xFBE1,3142,1},
  {0xFBE2,3143,1},
  {0xFBE3,3144,1},
  {0xFBE4,3145,1},
  {0xFBE5,3146,1},
  {0xFBE6,3147,1},
  {0xFBE7,3148,1},
  {0xFBE8,3149,1},
  {0xFBE9,3150,1},
  {0xFBEA,3151,2},
  {0xFBEB,3153,2},
  {0xFBEC,3155,2},
  {0xFBED,3157,2},
  {0xFBEE,3159,2},
  {0xFBEF,3161,2},
  {0xFBF0,3163,2},
  {0xFBF1,3165,2},
  {0xFBF2,3167,2},
  {0xFBF3,3169,2},
  {0xFBF4,3171,2},
  {0xFBF5,3173,2},
  {0xFBF6,3175,2},
  {0xFBF7,3177,2},
  {0xFBF8,3179,2},
  {0xFBF9,3181,2},
  {0xFBFA,3183,2},
  {0xFBFB,3185,2},
  {0xFBFC,3187,1},
  {0xFBFD,3188,1},
  {0xFBFE,3189,1},
  {0xFBFF,3190,1},
  {0xFC00,3191,2},
  {0xFC01,3193,2},
  {0xFC02,3195,2},
  {0xFC03,3197,2},
  {0xFC04,3199,2},
  {0xFC05,3201,2},
  {0xFC06,3203,2},
  {0xFC07,3205,2},
  {0xFC08,3207,2},
  {0xFC09,3209,2},
  {0xFC0A,3211,2},
  {0xFC0B,3213,2},
  {0xFC0C,3215,2},
  {0xFC0D,3217,2},
  {0xFC0E,3219,2},
  {0xFC0F,3221,2},
  {0xFC10,3223,2},
  {0xFC11,3225,2},
  {0xFC12,3227,2},
  {0xFC13,3229,2},
  {0xFC14,3231,2},
  {0xFC15,3233,2},
  {0xFC16,3235,2},
  {0xFC17,3237,2},
  {0xFC18,3239,2},
  {0xFC19,3241,2},
  {0xFC1A,3243,2},
  {0xFC1B,3245,2},
  {0xFC1C,3247,2},
  {0xFC1D,3249,2},
  {0xFC1E,3251,2},
  {0xFC1F,3253,2},
  {0xFC20,3255,2},
  {0xFC21,3257,2},
  {0xFC22,3259,2},
  {0xFC23,3261,2},
  {0xFC24,3263,2},
  {0xFC25,3265,2},
  {0xFC26,3267,2},
  {0xFC27,3269,2},
  {0xFC28,3271,2},
  {0xFC29,3273,2},
  {0xFC2A,3275,2},
  {0xFC2B,3277,2},
  {0xFC2C,3279,2},
  {0xFC2D,3281,2},
  {0xFC2E,3283,2},
  {0xFC2F,3285,2},
  {0xFC30,3287,2},
  {0xFC31,3289,2},
  {0xFC32,3291,2},
  {0xFC33,3293,2},
  {0xFC34,3295,2},
  {0xFC35,3297,2},
  {0xFC36,3299,2},
  {0xFC37,3301,2},
  {0xFC38,3303,2},
  {0xFC39,3305,2},
  {0xFC3A,3307,2},
  {0xFC3B,3309,2},
  {0xFC3C,3311,2},
  {0xFC3D,3313,2},
  {0xFC3E,3315,2},
  {0xFC3F,3317,2},
  {0xFC40,3319,2},
  {0xFC41,3321,2},
  {0xFC42,3323,2},
  {0xFC43,3325,2},
  {0xFC44,3327,2},
  {0xFC45,3329,2},
  {0xFC46,3331,2},
  {0xFC47,3333,2},
  {0xFC48,3335,2},
  {0xFC49,3337,2},
  {0xFC4A,3339,2},
  {0xFC4B,3341,2},
  {0xFC4C,3343,2},
  {0xFC4D,3345,2},
  {0xFC4E,3347,2},
  {0xFC4F,3349,2},
  {0xFC50,3351,2},
  {0xFC51,3353,2},
  {0xFC52,3355,2},
  {0xFC53,3357,2},
  {0xFC54,3359,2},
  {0xFC55,3361,2},
  {0xFC56,3363,2},
  {0xFC57,3365,2},
  {0xFC58,3367,2},
  {0xFC59,3369,2},
  {0xFC5A,3371,2},
  {0xFC5B,3373,2},
  {0xFC5C,3375,2},
  {0xFC5D,3377,2},
  {0xFC5E,3379,3},
  {0xFC5F,3382,3},
  {0xFC60,3385,3},
  {0xFC61,3388,3},
  {0xFC62,3391,3},
  {0xFC63,3394,3},
  {0xFC64,3397,2},
  {0xFC65,3399,2},
  {0xFC66,3401,2},
  {0xFC67,3403,2},
  {0xFC68,3405,2},
  {0xFC69,3407,2},
  {0xFC6A,3409,2},
  {0xFC6B,3411,2},
  {0xFC6C,3413,2},
  {0xFC6D,3415,2},
  {0xFC6E,3417,2},
  {0xFC6F,3419,2},
  {0xFC70,3421,2},
  {0xFC71,3423,2},
  {0xFC72,3425,2},
  {0xFC73,3427,2},
  {0xFC74,3429,2},
  {0xFC75,3431,2},
  {0xFC76,3433,2},
  {0xFC77,3435,2},
  {0xFC78,3437,2},
  {0xFC79,3439,2},
  {0xFC7A,3441,2},
  {0xFC7B,3443,2},
  {0xFC7C,3445,2},
  {0xFC7D,3447,2},
  {0xFC7E,3449,2},
  {0xFC7F,3451,2},
  {0xFC80,3453,2},
  {0xFC81,3455,2},
  {0xFC82,3457,2},
  {0xFC83,3459,2},
  {0xFC84,3461,2},
  {0xFC85,3463,2},
  {0xFC86,3465,2},
  {0xFC87,3467,2},
  {0xFC88,3469,2},
  {0xFC89,3471,2},
  {0xFC8A,3473,2},
  {0xFC8B,3475,2},
  {0xFC8C,3477,2},
  {0xFC8D,3479,2},
  {0xFC8E,3481,2},
  {0xFC8F,3483,2},
  {0xFC90,3485,2},
  {0xFC91,3487,2},
  {0xFC92,3489,2},
  {0xFC93,3491,2},
  {0xFC94,3493,2},
  {0xFC95,3495,2},
  {0xFC96,3497,2},
  {0xFC97,3499,2},
  {0xFC98,3501,2},
  {0xFC99,3503,2},
  {0xFC9A,3505,2},
  {0xFC9B,3507,2},
  {0xFC9C,3509,2},
  {0xFC9D,3511,2},
  {0xFC9E,3513,2},
  {0xFC9F,3515,2},
  {0xFCA0,3517,2},
  {0xFCA1,3519,2},
  {0xFCA2,3521,2},
  {0xFCA3,3523,2},
  {0xFCA4,3525,2},
  {0xFCA5,3527,2},
  {0xFCA6,3529,2},
  {0xFCA7,3531,2},
  {0xFCA8,3533,2},
  {0xFCA9,3535,2},
  {0xFCAA,3537,2},
  {0xFCAB,3539,2},
  {0xFCAC,3541,2},
  {0xFCAD,3543,2},
  {0xFCAE,3545,2},
  {0xFCAF,3547,2},
  {0xFCB0,3549,2},
  {0xFCB1,3551,2},
  {0xFCB2,3553,2},
  {0xFCB3,3555,2},
  {0xFCB4,3557,2},
  {0xFCB5,3559,2},
  {0xFCB6,3561,2},
  {0xFCB7,3563,2},
  {0xFCB8,3565,2},
  {0xFCB9,3567,2},
  {0xFCBA,3569,2},
  {0xFCBB,3571,2},
  {0xFCBC,3573,2},
  {0xFCBD,3575,2},
  {0xFCBE,3577,2},
  {0xFCBF,3579,2},
  {0xFCC0,3581,2},
  {0xFCC1,3583,2},
  {0xFCC2,3585,2},
  {0xFCC3,3587,2},
  {0xFCC4,3589,2},
  {0xFCC5,3591,2},
  {0xFCC6,3593,2},
  {0xFCC7,3595,2},
  {0xFCC8,3597,2},
  {0xFCC9,3599,2},
  {0xFCCA,3601,2},
  {0xFCCB,3603,2},
  {0xFCCC,3605,2},
  {0xFCCD,3607,2},
  {0xFCCE,3609,2},
  {0xFCCF,3611,2},
  {0xFCD0,3613,2},
  {0xFCD1,3615,2},
  {0xFCD2,3617,2},
  {0xFCD3,3619,2},
  {0xFCD4,3621,2},
  {0xFCD5,3623,2},
  {0xFCD6,3625,2},
  {0xFCD7,3627,2},
  {0xFCD8,3629,2},
  {0xFCD9,3631,2},
  {0xFCDA,3633,2},
  {0xFCDB,3635,2},
  {0xFCDC,3637,2},
  {0xFCDD,3639,2},
  {0xFCDE,3641,2},
  {0xFCDF,3643,2},
  {0xFCE0,3645,2},
  {0xFCE1,3647,2},
  {0xFCE2,3649,2},
  {0xFCE3,3651,2},
  {0xFCE4,3653,2},
  {0xFCE5,3655,2},
  {0xFCE6,3657,2},
  {0xFCE7,3659,2},
  {0xFCE8,3661,2},
  {0xFCE9,3663,2},
  {0xFCEA,3665,2},
  {0xFCEB,3667,2},
  {0xFCEC,3669,2},
  {0xFCED,3671,2},
  {0xFCEE,3673,2},
  {0xFCEF,3675,2},
  {0xFCF0,3677,2},
  {0xFCF1,3679,2},
  {0xFCF2,3681,3},
  {0xFCF3,3684,3},
  {0xFCF4,3687,3},
  {0xFCF5,3690,2},
  {0xFCF6,3692,2},
  {0xFCF7,3694,2},
  {0xFCF8,3696,2},
  {0xFCF9,3698,2},
  {0xFCFA,3700,2},
  {0xFCFB,3702,2},
  {0xFCFC,3704,2},
  {0xFCFD,3706,2},
  {0xFCFE,3708,2},
  {0xFCFF,3710,2},
  {0xFD00,3712,2},
  {0xFD01,3714,2},
  {0xFD02,3716,2},
  {0xFD03,3718,2},
  {0xFD04,3720,2},
  {0xFD05,3722,2},
  {0xFD06,3724,2},
  {0xFD07,3726,2},
  {0xFD08,3728,2},
  {0xFD09,3730,2},
  {0xFD0A,3732,2},
  {0xFD0B,3734,2},
  {0xFD0C,3736,2},
  {0xFD0D,3738,2},
  {0xFD0E,3740,2},
  {0xFD0F,3742,2},
  {0xFD10,3744,2},
  {0xFD11,3746,2},
  {0xFD12,3748,2},
  {0xFD13,3750,2},
  {0xFD14,3752,2},
  {0xFD15,3754,2},
  {0xFD16,3756,2},
  {0xFD17,3758,2},
  {0xFD18,3760,2},
  {0xFD19,3762,2},
  {0xFD1A,3764,2},
  {0xFD1B,3766,2},
  {0xFD1C,3768,2},
  {0xFD1D,3770,2},
  {0xFD1E,3772,2},
  {0xFD1F,3774,2},
  {0xFD20,3776,2},
  {0xFD21,3778,2},
  {0xFD22,3780,2},
  {0xFD23,3782,2},
  {0xFD24,3784,2},
  {0xFD25,3786,2},
  {0xFD26,3788,2},
  {0xFD27,3790,2},
  {0xFD28,3792,2},
  {0xFD29,3794,2},
  {0xFD2A,3796,2},
  {0xFD2B,3798,2},
  {0xFD2C,3800,2},
  {0xFD2D,3802,2},
  {0xFD2E,3804,2},
  {0xFD2F,3806,2},
  {0xFD30,3808,2},
  {0xFD31,3810,2},
  {0xFD32,3812,2},
  {0xFD33,3814,2},
  {0xFD34,3816,2},
  {0xFD35,3818,2},
  {0xFD36,3820,2},
  {0xFD37,3822,2},
  {0xFD38,3824,2},
  {0xFD39,3826,2},
  {0xFD3A,3828,2},
  {0xFD3B,3830,2},
  {0xFD3C,3832,2},
  {0xFD3D,3834,2},
  {0xFD50,3836,3},
  {0xFD51,3839,3},
  {0xFD52,3842,3},
  {0xFD53,3845,3},
  {0xFD54,3848,3},
  {0xFD55,3851,3},
  {0xFD56,3854,3},
  {0xFD57,3857,3},
  {0xFD58,3860,3},
  {0xFD59,3863,3},
  {0xFD5A,3866,3},
  {0xFD5B,3869,3},
  {0xFD5C,3872,3},
  {0xFD5D,3875,3},
  {0xFD5E,3878,3},
  {0xFD5F,3881,3},
  {0xFD60,3884,3},
  {0xFD61,3887,3},
  {0xFD62,3890,3},
  {0xFD63,3893,3},
  {0xFD64,3896,3},
  {0xFD65,3899,3},
  {0xFD66,3902,3},
  {0xFD67,3905,3},
  {0xFD68,3908,3},
  {0xFD69,3911,3},
  {0xFD6A,3914,3},
  {0xFD6B,3917,3},
  {0xFD6C,3920,3},
  {0xFD6D,3923,3},
  {0xFD6E,3926,3},
  {0xFD6F,3929,3},
  {0xFD70,3932,3},
  {0xFD71,3935,3},
  {0xFD72,3938,3},
  {0xFD73,3941,3},
  {0xFD74,3944,3},
  {0xFD75,3947,3},
  {0xFD76,3950,3},
  {0xFD77,3953,3},
  {0xFD78,3956,3},
  {0xFD79,3959,3},
  {0xFD7A,3962,3},
  {0xFD7B,3965,3},
  {0xFD7C,3968,3},
  {0xFD7D,3971,3},
  {0xFD7E,3974,3},
  {0xFD7F,3977,3},
  {0xFD80,3980,3},
  {0xFD81,3983,3},
  {0xFD82,3986,3},
  {0xFD83,3989,3},
  {0xFD84,3992,3},
  {0xFD85,3995,3},
  {0xFD86,3998,3},
  {0xFD87,4001,3},
  {0xFD88,4004,3},
  {0xFD89,4007,3},
  {0xFD8A,4010,3},
  {0xFD8B,4013,3},
  {0xFD8C,4016,3},
  {0xFD8D,4019,3},
  {0xFD8E,4022,3},
  {0xFD8F,4025,3},
  {0xFD92,4028,3},
  {0xFD93,4031,3},
  {0xFD94,4034,3},
  {0xFD95,4037,3},
  {0xFD96,4040,3},
  {0xFD97,4043,3},
  {0xFD98,4046,3},
  {0xFD99,4049,3},
  {0xFD9A,4052,3},
  {0xFD9B,4055,3},
  {0xFD9C,4058,3},
  {0xFD9D,4061,3},
  {0xFD9E,4064,3},
  {0xFD9F,4067,3},
  {0xFDA0,4070,3},
  {0xFDA1,4073,3},
  {0xFDA2,4076,3},
  {0xFDA3,4079,3},
  {0xFDA4,4082,3},
  {0xFDA5,4085,3},
  {0xFDA6,4088,3},
  {0xFDA7,4091,3},
  {0xFDA8,4094,3},
  {0xFDA9,4097,3},
  {0xFDAA,4100,3},
  {0xFDAB,4103,3},
  {0xFDAC,4106,3},
  {0xFDAD,4109,3},
  {0xFDAE,4112,3},
  {0xFDAF,4115,3},
  {0xFDB0,4118,3},
  {0xFDB1,4121,3},
  {0xFDB2,4124,3},
  {0xFDB3,4127,3},
  {0xFDB4,4130,3},
  {0xFDB5,4133,3},
  {0xFDB6,4136,3},
  {0xFDB7,4139,3},
  {0xFDB8,4142,3},
  {0xFDB9,4145,3},
  {0xFDBA,4148,3},
  {0xFDBB,4151,3},
  {0xFDBC,4154,3},
  {0xFDBD,4157,3},
  {0xFDBE,4160,3},
  {0xFDBF,4163,3},
  {0xFDC0,4166,3},
  {0xFDC1,4169,3},
  {0xFDC2,4172,3},
  {0xFDC3,4175,3},
  {0xFDC4,4178,3},
  {0xFDC5,4181,3},
  {0xFDC6,4184,3},
  {0xFDC7,4187,3},
  {0xFDF0,4190,3},
  {0xFDF1,4193,3},
  {0xFDF2,4196,4},
  {0xFDF3,4200,4},
  {0xFDF4,4204,4},
  {0xFDF5,4208,4},
  {0xFDF6,4212,4},
  {0xFDF7,4216,4},
  {0xFDF8,4220,4},
  {0xFDF9,4224,3},
  {0xFDFA,4227,18},
  {0xFDFB,4245,8},
  {0xFDFC,4253,4},
  {0xFE10,4257,1},
  {0xFE11,4258,1},
  {0xFE12,4259,1},
  {0xFE13,4260,1},
  {0xFE14,4261,1},
  {0xFE15,4262,1},
  {0xFE16,4263,1},
  {0xFE17,4264,1},
  {0xFE18,4265,1},
  {0xFE19,4266,3},
  {0xFE30,4269,2},
  {0xFE31,4271,1},
  {0xFE32,4272,1},
  {0xFE33,4273,1},
  {0xFE34,4274,1},
  {0xFE35,4275,1},
  {0xFE36,4276,1},
  {0xFE37,4277,1},
  {0xFE38,4278,1},
  {0xFE39,4279,1},
  {0xFE3A,4280,1},
  {0xFE3B,4281,1},
  {0xFE3C,4282,1},
  {0xFE3D,4283,1},
  {0xFE3E,4284,1},
  {0xFE3F,4285,1},
  {0xFE40,4286,1},
  {0xFE41,4287,1},
  {0xFE42,4288,1},
  {0xFE43,4289,1},
  {0xFE44,4290,1},
  {0xFE47,4291,1},
  {0xFE48,4292,1},
  {0xFE49,4293,2},
  {0xFE4A,4295,2},
  {0xFE4B,4297,2},
  {0xFE4C,4299,2},
  {0xFE4D,4301,1},
  {0xFE4E,4302,1},
  {0xFE4F,4303,1},
  {0xFE50,4304,1},
  {0xFE51,4305,1},
  {0xFE52,4306,1},
  {0xFE54,4307,1},
  {0xFE55,4308,1},
  {0xFE56,4309,1},
  {0xFE57,4310,1},
  {0xFE58,4311,1},
  {0xFE59,4312,1},
  {0xFE5A,4313,1},
  {0xFE5B,4314,1},
  {0xFE5C,4315,1},
  {0xFE5D,4316,1},
  {0xFE5E,4317,1},
  {0xFE5F,4318,1},
  {0xFE60,4319,1},
  {0xFE61,4320,1},
  {0xFE62,4321,1},
  {0xFE63,4322,1},
  {0xFE64,4323,1},
  {0xFE65,4324,1},
  {0xFE66,4325,1},
  {0xFE68,4326,1},
  {0xFE69,4327,1},
  {0xFE6A,4328,1},
  {0xFE6B,4329,1},
  {0xFE70,4330,2},
  {0xFE71,4332,2},
  {0xFE72,4334,2},
  {0xFE74,4336,2},
  {0xFE76,4338,2},
  {0xFE77,4340,2},
  {0xFE78,4342,2},
  {0xFE79,4344,2},
  {0xFE7A,4346,2},
  {0xFE7B,4348,2},
  {0xFE7C,4350,2},
  {0xFE7D,4352,2},
  {0xFE7E,4354,2},
  {0xFE7F,4356,2},
  {0xFE80,4358,1},
  {0xFE81,4359,1},
  {0xFE82,4360,1},
  {0xFE83,4361,1},
  {0xFE84,4362,1},
  {0xFE85,4363,1},
  {0xFE86,4364,1},
  {0xFE87,4365,1},
  {0xFE88,4366,1},
  {0xFE89,4367,1},
  {0xFE8A,4368,1},
  {0xFE8B,4369,1},
  {0xFE8C,4370,1},
  {0xFE8D,4371,1},
  {0xFE8E,4372,1},
  {0xFE8F,4373,1},
  {0xFE90,4374,1},
  {0xFE91,4375,1},
  {0xFE92,4376,1},
  {0xFE93,4377,1},
  {0xFE94,4378,1},
  {0xFE95,4379,1},
  {0xFE96,4380,1},
  {0xFE97,4381,1},
  {0xFE98,4382,1},
  {0xFE99,4383,1},
  {0xFE9A,4384,1},
  {0xFE9B,4385,1},
  {0xFE9C,4386,1},
  {0xFE9D,4387,1},
  {0xFE9E,4388,1},
  {0xFE9F,4389,1},
  {0xFEA0,4390,1},
  {0xFEA1,4391,1},
  {0xFEA2,4392,1},
  {0xFEA3,4393,1},
  {0xFEA4,4394,1},
  {0xFEA5,4395,1},
  {0xFEA6,4396,1},
  {0xFEA7,4397,1},
  {0xFEA8,4398,1},
  {0xFEA9,4399,1},
  {0xFEAA,4400,1},
  {0xFEAB,4401,1},
  {0xFEAC,4402,1},
  {0xFEAD,4403,1},
  {0xFEAE,4404,1},
  {0xFEAF,4405,1},
  {0xFEB0,4406,1},
  {0xFEB1,4407,1},
  {0xFEB2,4408,1},
  {0xFEB3,4409,1},
  {0xFEB4,4410,1},
  {0xFEB5,4411,1},
  {0xFEB6,4412,1},
  {0xFEB7,4413,1},
  {0xFEB8,4414,1},
  {0xFEB9,4415,1},
  {0xFEBA,4416,1},
  {0xFEBB,4417,1},
  {0xFEBC,4418,1},
  {0xFEBD,4419,1},
  {0xFEBE,4420,1},
  {0xFEBF,4421,1},
  {0xFEC0,4422,1},
  {0xFEC1,4423,1},
  {0xFEC2,4424,1},
  {0xFEC3,4425,1},
  {0xFEC4,4426,1},
  {0xFEC5,4427,1},
  {0xFEC6,4428,1},
  {0xFEC7,4429,1},
  {0xFEC8,4430,1},
  {0xFEC9,4431,1},
  {0xFECA,4432,1},
  {0xFECB,4433,1},
  {0xFECC,4434,1},
  {0xFECD,4435,1},
  {0xFECE,4436,1},
  {0xFECF,4437,1},
  {0xFED0,4438,1},
  {0xFED1,4439,1},
  {0xFED2,4440,1},
  {0xFED3,4441,1},
  {0xFED4,4442,1},
  {0xFED5,4443,1},
  {0xFED6,4444,1},
  {0xFED7,4445,1},
  {0xFED8,4446,1},
  {0xFED9,4447,1},
  {0xFEDA,4448,1},
  {0xFEDB,4449,1},
  {0xFEDC,4450,1},
  {0xFEDD,4451,1},
  {0xFEDE,4452,1},
  {0xFEDF,4453,1},
  {0xFEE0,4454,1},
  {0xFEE1,4455,1},
  {0xFEE2,4456,1},
  {0xFEE3,4457,1},
  {0xFEE4,4458,1},
  {0xFEE5,4459,1},
  {0xFEE6,4460,1},
  {0xFEE7,4461,1},
  {0xFEE8,4462,1},
  {0xFEE9,4463,1},
  {0xFEEA,4464,1},
  {0xFEEB,4465,1},
  {0xFEEC,4466,1},
  {0xFEED,4467,1},
  {0xFEEE,4468,1},
  {0xFEEF,4469,1},
  {0xFEF0,4470,1},
  {0xFEF1,4471,1},
  {0xFEF2,4472,1},
  {0xFEF3,4473,1},
  {0xFEF4,4474,1},
  {0xFEF5,4475,2},
  {0xFEF6,4477,2},
  {0xFEF7,4479,2},
  {0xFEF8,4481,2},
  {0xFEF9,4483,2},
  {0xFEFA,4485,2},
  {0xFEFB,4487,2},
  {0xFEFC,4489,2},
  {0xFF01,4491,1},
  {0xFF02,4492,1},
  {0xFF03,4493,1},
  {0xFF04,4494,1},
  {0xFF05,4495,1},
  {0xFF06,4496,1},
  {0xFF07,4497,1},
  {0xFF08,4498,1},
  {0xFF09,4499,1},
  {0xFF0A,4500,1},
  {0xFF0B,4501,1},
  {0xFF0C,4502,1},
  {0xFF0D,4503,1},
  {0xFF0E,4504,1},
  {0xFF0F,4505,1},
  {0xFF10,4506,1},
  {0xFF11,4507,1},
  {0xFF12,4508,1},
  {0xFF13,4509,1},
  {0xFF14,4510,1},
  {0xFF15,4511,1},
  {0xFF16,4512,1},
  {0xFF17,4513,1},
  {0xFF18,4514,1},
  {0xFF19,4515,1},
  {0xFF1A,4516,1},
  {0xFF1B,4517,1},
  {0xFF1C,4518,1},
  {0xFF1D,4519,1},
  {0xFF1E,4520,1},
  {0xFF1F,4521,1},
  {0xFF20,4522,1},
  {0xFF21,4523,1},
  {0xFF22,4524,1},
  {0xFF23,4525,1},
  {0xFF24,4526,1},
  {0xFF25,4527,1},
  {0xFF26,4528,1},
  {0xFF27,4529,1},
  {0xFF28,4530,1},
  {0xFF29,4531,1},
  {0xFF2A,4532,1},
  {0xFF2B,4533,1},
  {0xFF2C,4534,1},
  {0xFF2D,4535,1},
  {0xFF2E,4536,1},
  {0xFF2F,4537,1},
  {0xFF30,4538,1},
  {0xFF31,4539,1},
  {0xFF32,4540,1},
  {0xFF33,4541,1},
  {0xFF34,4542,1},
  {0xFF35,4543,1},
  {0xFF36,4544,1},
  {0xFF37,4545,1},
  {0xFF38,4546,1},
  {0xFF39,4547,1},
  {0xFF3A,4548,1},
  {0xFF3B,4549,1},
  {0xFF3C,4550,1},
  {0xFF3D,4551,1},
  {0xFF3E,4552,1},
  {0xFF3F,4553,1},
  {0xFF40,4554,1},
  {0xFF41,4555,1},
  {0xFF42,4556,1},
  {0xFF43,4557,1},
  {0xFF44,4558,1},
  {0xFF45,4559,1},
  {0xFF46,4560,1},
  {0xFF47,4561,1},
  {0xFF48,4562,1},
  {0xFF49,4563,1},
  {0xFF4A,4564,1},
  {0xFF4B,4565,1},
  {0xFF4C,4566,1},
  {0xFF4D,4567,1},
  {0xFF4E,4568,1},
  {0xFF4F,4569,1},
  {0xFF50,4570,1},
  {0xFF51,4571,1},
  {0xFF52,4572,1},
  {0xFF53,4573,1},
  {0xFF54,4574,1},
  {0xFF55,4575,1},
  {0xFF56,4576,1},
  {0xFF57,4577,1},
  {0xFF58,4578,1},
  {0xFF59,4579,1},
  {0xFF5A,4580,1},
  {0xFF5B,4581,1},
  {0xFF5C,4582,1},
  {0xFF5D,4583,1},
  {0xFF5E,4584,1},
  {0xFF5F,4585,1},
  {0xFF60,4586,1},
  {0xFF61,4587,1},
  {0xFF62,4588,1},
  {0xFF63,4589,1},
  {0xFF64,4590,1},
  {0xFF65,4591,1},
  {0xFF66,4592,1},
  {0xFF67,4593,1},
  {0xFF68,4594,1},
  {0xFF69,4595,1},
  {0xFF6A,4596,1},
  {0xFF6B,4597,1},
  {0xFF6C,4598,1},
  {0xFF6D,4599,1},
  {0xFF6E,4600,1},
  {0xFF6F,4601,1},
  {0xFF70,4602,1},
  {0xFF71,4603,1},
  {0xFF72,4604,1},
  {0xFF73,4605,1},
  {0xFF74,4606,1},
  {0xFF75,4607,1},
  {0xFF76,4608,1},
  {0xFF77,4609,1},
  {0xFF78,4610,1},
  {0xFF79,4611,1},
  {0xFF7A,4612,1},
  {0xFF7B,4613,1},
  {0xFF7C,4614,1},
  {0xFF7D,4615,1},
  {0xFF7E,4616,1},
  {0xFF7F,4617,1},
  {0xFF80,4618,1},
  {0xFF81,4619,1},
  {0xFF82,4620,1},
  {0xFF83,4621,1},
  {0xFF84,4622,1},
  {0xFF85,4623,1},
  {0xFF86,4624,1},
  {0xFF87,4625,1},
  {0xFF88,4626,1},
  {0xFF89,4627,1},
  {0xFF8A,4628,1},
  {0xFF8B,4629,1},
  {0xFF8C,4630,1},
  {0xFF8D,4631,1},
  {0xFF8E,4632,1},
  {0xFF8F,4633,1},
  {0xFF90,4634,1},
  {0xFF91,4635,1},
  {0xFF92,4636,1},
  {0xFF93,4637,1},
  {0xFF94,4638,1},
  {0xFF95,4639,1},
  {0xFF96,4640,1},
  {0xFF97,4641,1},
  {0xFF98,4642,1},
  {0xFF99,4643,1},
  {0xFF9A,4644,1},
  {0xFF9B,4645,1},
  {0xFF9C,4646,1},
  {0xFF9D,4647,1},
  {0xFF9E,4648,1},
  {0xFF9F,4649,1},
  {0xFFA0,4650,1},
  {0xFFA1,4651,1},
  {0xFFA2,4652,1},
  {0xFFA3,4653,1},
  {0xFFA4,4654,1},
  {0xFFA5,4655,1},
  {0xFFA6,4656,1},
  {0xFFA7,4657,1},
  {0xFFA8,4658,1},
  {0xFFA9,4659,1},
  {0xFFAA,4660,1},
  {0xFFAB,4661,1},
  {0xFFAC,4662,1},
  {0xFFAD,4663,1},
  {0xFFAE,4664,1},
  {0xFFAF,4665,1},
  {0xFFB0,4666,1},
  {0xFFB1,4667,1},
  {0xFFB2,4668,1},
  {0xFFB3,4669,1},
  {0xFFB4,4670,1},
  {0xFFB5,4671,1},
  {0xFFB6,4672,1},
  {0xFFB7,4673,1},
  {0xFFB8,4674,1},
  {0xFFB9,4675,1},
  {0xFFBA,4676,1},
  {0xFFBB,4677,1},
  {0xFFBC,4678,1},
  {0xFFBD,4679,1},
  {0xFFBE,4680,1},
  {0xFFC2,4681,1},
  {0xFFC3,4682,1},
  {0xFFC4,4683,1},
  {0xFFC5,4684,1},
  {0xFFC6,4685,1},
  {0xFFC7,4686,1},
  {0xFFCA,4687,1},
  {0xFFCB,4688,1},
  {0xFFCC,4689,1},
  {0xFFCD,4690,1},
  {0xFFCE,4691,1},
  {0xFFCF,4692,1},
  {0xFFD2,4693,1},
  {0xFFD3,4694,1},
  {0xFFD4,4695,1},
  {0xFFD5,4696,1},
  {0xFFD6,4697,1},
  {0xFFD7,4698,1},
  {0xFFDA,4699,1},
  {0xFFDB,4700,1},
  {0xFFDC,4701,1},
  {0xFFE0,4702,1},
  {0xFFE1,4703,1},
  {0xFFE2,4704,1},
  {0xFFE3,4705,2},
  {0xFFE4,4707,1},
  {0xFFE5,4708,1},
  {0xFFE6,4709,1},
  {0xFFE8,4710,1},
  {0xFFE9,4711,1},
  {0xFFEA,4712,1},
  {0xFFEB,4713,1},
  {0xFFEC,4714,1},
  {0xFFED,4715,1},
  {0xFFEE,4716,1},
  {0x1D15E,4717,2},
  {0x1D15F,4719,2},
  {0x1D160,4721,3},
  {0x1D161,4724,3},
  {0x1D162,4727,3},
  {0x1D163,4730,3},
  {0x1D164,4733,3},
  {0x1D1BB,4736,2},
  {0x1D1BC,4738,2},
  {0x1D1BD,4740,3},
  {0x1D1BE,4743,3},
  {0x1D1BF,4746,3},
  {0x1D1C0,4749,3},
  {0x1D400,4752,1},
  {0x1D401,4753,1},
  {0x1D402,4754,1},
  {0x1D403,4755,1},
  {0x1D404,4756,1},
  {0x1D405,4757,1},
  {0x1D406,4758,1},
  {0x1D407,4759,1},
  {0x1D408,4760,1},
  {0x1D409,4761,1},
  {0x1D40A,4762,1},
  {0x1D40B,4763,1},
  {0x1D40C,4764,1},
  {0x1D40D,4765,1},
  {0x1D40E,4766,1},
  {0x1D40F,4767,1},
  {0x1D410,4768,1},
  {0x1D411,4769,1},
  {0x1D412,4770,1},
  {0x1D413,4771,1},
  {0x1D414,4772,1},
  {0x1D415,4773,1},
  {0x1D416,4774,1},
  {0x1D417,4775,1},
  {0x1D418,4776,1},
  {0x1D419,4777,1},
  {0x1D41A,4778,1},
  {0x1D41B,4779,1},
  {0x1D41C,4780,1},
  {0x1D41D,4781,1},
  {0x1D41E,4782,1},
  {0x1D41F,4783,1},
  {0x1D420,4784,1},
  {0x1D421,4785,1},
  {0x1D422,4786,1},
  {0x1D423,4787,1},
  {0x1D424,4788,1},
  {0x1D425,4789,1},
  {0x1D426,4790,1},
  {0x1D427,4791,1},
  {0x1D428,4792,1},
  {0x1D429,4793,1},
  {0x1D42A,4794,1},
  {0x1D42B,4795,1},
  {0x1D42C,4796,1},
  {0x1D42D,4797,1},
  {0x1D42E,4798,1},
  {0x1D42F,4799,1},
  {0x1D430,4800,1},
  {0x1D431,4801,1},
  {0x1D432,4802,1},
  {0x1D433,4803,1},
  {0x1D434,4804,1},
  {0x1D435,4805,1},
  {0x1D436,4806,1},
  {0x1D437,4807,1},
  {0x1D438,4808,1},
  {0x1D439,4809,1},
  {0x1D43A,4810,1},
  {0x1D43B,4811,1},
  {0x1D43C,4812,1},
  {0x1D43D,4813,1},
  {0x1D43E,4814,1},
  {0x1D43F,4815,1},
  {0x1D440,4816,1},
  {0x1D441,4817,1},
  {0x1D442,4818,1},
  {0x1D443,4819,1},
  {0x1D444,4820,1},
  {0x1D445,4821,1},
  {0x1D446,4822,1},
  {0x1D447,4823,1},
  {0x1D448,4824,1},
  {0x1D449,4825,1},
  {0x1D44A,4826,1},
  {0x1D44B,4827,1},
  {0x1D44C,4828,1},
  {0x1D44D,4829,1},
  {0x1D44E,4830,1},
  {0x1D44F,4831,1},
  {0x1D450,4832,1},
  {0x1D451,4833,1},
  {0x1D452,4834,1},
  {0x1D453,4835,1},
  {0x1D454,4836,1},
  {0x1D456,4837,1},
  {0x1D457,4838,1},
  {0x1D458,4839,1},
  {0x1D459,4840,1},
  {0x1D45A,4841,1},
  {0x1D45B,4842,1},
  {0x1D45C,4843,1},
  {0x1D45D,4844,1},
  {0x1D45E,4845,1},
  {0x1D45F,4846,1},
  {0x1D460,4847,1},
  {0x1D461,4848,1},
  {0x1D462,4849,1},
  {0x1D463,4850,1},
  {0x1D464,4851,1},
  {0x1D465,4852,1},
  {0x1D466,4853,1},
  {0x1D467,4854,1},
  {0x1D468,4855,1},
  {0x1D469,4856,1},
  {0x1D46A,4857,1},
  {0x1D46B,4858,1},
  {0x1D46C,4859,1},
  {0x1D46D,4860,1},
  {0x1D46E,4861,1},
  {0x1D46F,4862,1},
  {0x1D470,4863,1},
  {0x1D471,4864,1},
  {0x1D472,4865,1},
  {0x1D473,4866,1},
  {0x1D474,4867,1},
  {0x1D475,4868,1},
  {0x1D476,4869,1},
  {0x1D477,4870,1},
  {0x1D478,4871,1},
  {0x1D479,4872,1},
  {0x1D47A,4873,1},
  {0x1D47B,4874,1},
  {0x1D47C,4875,1},
  {0x1D47D,4876,1},
  {0x1D47E,4877,1},
  {0x1D47F,4878,1},
  {0x1D480,4879,1},
  {0x1D481,4880,1},
  {0x1D482,4881,1},
  {0x1D483,4882,1},
  {0x1D484,4883,1},
  {0x1D485,4884,1},
  {0x1D486,4885,1},
  {0x1D487,4886,1},
  {0x1D488,4887,1},
  {0x1D489,4888,1},
  {0x1D48A,4889,1},
  {0x1D48B,4890,1},
  {0x1D48C,4891,1},
  {0x1D48D,4892,1},
  {0x1D48E,4893,1},
  {0x1D48F,4894,1},
  {0x1D490,4895,1},
  {0x1D491,4896,1},
  {0x1D492,4897,1},
  {0x1D493,4898,1},
  {0x1D494,4899,1},
  {0x1D495,4900,1},
  {0x1D496,4901,1},
  {0x1D497,4902,1},
  {0x1D498,4903,1},
  {0x1D499,4904,1},
  {0x1D49A,4905,1},
  {0x1D49B,4906,1},
  {0x1D49C,4907,1},
  {0x1D49E,4908,1},
  {0x1D49F,4909,1},
  {0x1D4A2,4910,1},
  {0x1D4A5,4911,1},
  {0x1D4A6,4912,1},
  {0x1D4A9,4913,1},
  {0x1D4AA,4914,1},
  {0x1D4AB,4915,1},
  {0x1D4AC,4916,1},
  {0x1D4AE,4917,1},
  {0x1D4AF,4918,1},
  {0x1D4B0,4919,1},
  {0x1D4B1,4920,1},
  {0x1D4B2,4921,1},
  {0x1D4B3,4922,1},
  {0x1D4B4,4923,1},
  {0x1D4B5,4924,1},
  {0x1D4B6,4925,1},
  {0x1D4B7,4926,1},
  {0x1D4B8,4927,1},
  {0x1D4B9,4928,1},
  {0x1D4BB,4929,1},
  {0x1D4BD,4930,1},
  {0x1D4BE,4931,1},
  {0x1D4BF,4932,1},
  {0x1D4C0,4933,1},
  {0x1D4C1,4934,1},
  {0x1D4C2,4935,1},
  {0x1D4C3,4936,1},
  {0x1D4C5,4937,1},
  {0x1D4C6,4938,1},
  {0x1D4C7,4939,1},
  {0x1D4C8,4940,1},
  {0x1D4C9,4941,1},
  {0x1D4CA,4942,1},
  {0x1D4CB,4943,1},
  {0x1D4CC,4944,1},
  {0x1D4CD,4945,1},
  {0x1D4CE,4946,1},
  {0x1D4CF,4947,1},
  {0x1D4D0,4948,1},
  {0x1D4D1,4949,1},
  {0x1D4D2,4950,1},
  {0x1D4D3,4951,1},
  {0x1D4D4,4952,1},
  {0x1D4D5,4953,1},
  {0x1D4D6,4954,1},
  {0x1D4D7,4955,1},
  {0x1D4D8,4956,1},
  {0x1D4D9,4957,1},
  {0x1D4DA,4958,1},
  {0x1D4DB,4959,1},
  {0x1D4DC,4960,1},
  {0x1D4DD,4961,1},
  {0x1D4DE,4962,1},
  {0x1D4DF,4963,1},
  {0x1D4E0,4964,1},
  {0x1D4E1,4965,1},
  {0x1D4E2,4966,1},
  {0x1D4E3,4967,1},
  {0x1D4E4,4968,1},
  {0x1D4E5,4969,1},
  {0x1D4E6,4970,1},
  {0x1D4E7,4971,1},
  {0x1D4E8,4972,1},
  {0x1D4E9,4973,1},
  {0x1D4EA,4974,1},
  {0x1D4EB,4975,1},
  {0x1D4EC,4976,1},
  {0x1D4ED,4977,1},
  {0x1D4EE,4978,1},
  {0x1D4EF,4979,1},
  {0x1D4F0,4980,1},
  {0x1D4F1,4981,1},
  {0x1D4F2,4982,1},
  {0x1D4F3,4983,1},
  {0x1D4F4,4984,1},
  {0x1D4F5,4985,1},
  {0x1D4F6,4986,1},
  {0x1D4F7,4987,1},
  {0x1D4F8,4988,1},
  {0x1D4F9,4989,1},
  {0x1D4FA,4990,1},
  {0x1D4FB,4991,1},
  {0x1D4FC,4992,1},
  {0x1D4FD,4993,1},
  {0x1D4FE,4994,1},
  {0x1D4FF,4995,1},
  {0x1D500,4996,1},
  {0x1D501,4997,1},
  {0x1D502,4998,1},
  {0x1D503,4999,1},
  {0x1D504,5000,1},
  {0x1D505,5001,1},
  {0x1D507,5002,1},
  {0x1D508,5003,1},
  {0x1D509,5004,1},
  {0x1D50A,5005,1},
  {0x1D50D,5006,1},
  {0x1D50E,5007,1},
  {0x1D50F,5008,1},
  {0x1D510,5009,1},
  {0x1D511,5010,1},
  {0x1D512,5011,1},
  {0x1D513,5012,1},
  {0x1D514,5013,1},
  {0x1D516,5014,1},
  {0x1D517,5015,1},
  {0x1D518,5016,1},
  {0x1D519,5017,1},
  {0x1D51A,5018,1},
  {0x1D51B,5019,1},
  {0x1D51C,5020,1},
  {0x1D51E,5021,1},
  {0x1D51F,5022,1},
  {0x1D520,5023,1},
  {0x1D521,5024,1},
  {0x1D522,5025,1},
  {0x1D523,5026,1},
  {0x1D524,5027,1},
  {0x1D525,5028,1},
  {0x1D526,5029,1},
  {0x1D527,5030,1},
  {0x1D528,5031,1},
  {0x1D529,5032,1},
  {0x1D52A,5033,1},
  {0x1D52B,5034,1},
  {0x1D52C,5035,1},
  {0x1D52D,5036,1},
  {0x1D52E,5037,1},
  {0x1D52F,5038,1},
  {0x1D530,5039,1},
  {0x1D531,5040,1},
  {0x1D532,5041,1},
  {0x1D533,5042,1},
  {0x1D534,5043,1},
  {0x1D535,5044,1},
  {0x1D536,5045,1},
  {0x1D537,5046,1},
  {0x1D538,5047,1},
  {0x1D539,5048,1},
  {0x1D53B,5049,1},
  {0x1D53C,5050,1},
  {0x1D53D,5051,1},
  {0x1D53E,5052,1},
  {0x1D540,5053,1},
  {0x1D541,5054,1},
  {0x1D542,5055,1},
  {0x1D543,5056,1},
  {0x1D544,5057,1},
  {0x1D546,5058,1},
  {0x1D54A,5059,1},
  {0x1D54B,5060,1},
  {0x1D54C,5061,1},
  {0x1D54D,5062,1},
  {0x1D54E,5063,1},
  {0x1D54F,5064,1},
  {0x1D550,5065,1},
  {0x1D552,5066,1},
  {0x1D553,5067,1},
  {0x1D554,5068,1},
  {0x1D555,5069,1},
  {0x1D556,5070,1},
  {0x1D557,5071,1},
  {0x1D558,5072,1},
  {0x1D559,5073,1},
  {0x1D55A,5074,1},
  {0x1D55B,5075,1},
  {0x1D55C,5076,1},
  {0x1D55D,5077,1},
  {0x1D55E,5078,1},
  {0x1D55F,5079,1},
  {0x1D560,5080,1},
  {0x1D561,5081,1},
  {0x1D562,5082,1},
  {0x1D563,5083,1},
  {0x1D564,5084,1},
  {0x1D565,5085,1},
  {0x1D566,5086,1},
  {0x1D567,5087,1},
  {0x1D568,5088,1},
  {0x1D569,5089,1},
  {0x1D56A,5090,1},
  {0x1D56B,5091,1},
  {0x1D56C,5092,1},
  {0x1D56D,5093,1},
  {0x1D56E,5094,1},
  {0x1D56F,5095,1},
  {0x1D570,5096,1},
  {0x1D571,5097,1},
  {0x1D572,5098,1},
  {0x1D573,5099,1},
  {0x1D574,5100,1},
  {0x1D575,5101,1},
  {0x1D576,5102,1},
  {0x1D577,5103,1},
  {0x1D578,5104,1},
  {0x1D579,5105,1},
  {0x1D57A,5106,1},
  {0x1D57B,5107,1},
  {0x1D57C,5108,1},
  {0x1D57D,5109,1},
  {0x1D57E,5110,1},
  {0x1D57F,5111,1},
  {0x1D580,5112,1},
  {0x1D581,5113,1},
  {0x1D582,5114,1},
  {0x1D583,5115,1},
  {0x1D584,5116,1},
  {0x1D585,5117,1},
  {0x1D586,5118,1},
  {0x1D587,5119,1},
  {0x1D588,5120,1},
  {0x1D589,5121,1},
  {0x1D58A,5122,1},
  {0x1D58B,5123,1},
  {0x1D58C,5124,1},
  {0x1D58D,5125,1},
  {0x1D58E,5126,1},
  {0x1D58F,5127,1},
  {0x1D590,5128,1},
  {0x1D591,5129,1},
  {0x1D592,5130,1},
  {0x1D593,5131,1},
  {0x1D594,5132,1},
  {0x1D595,5133,1},
  {0x1D596,5134,1},
  {0x1D597,5135,1},
  {0x1D598,5136,1},
  {0x1D599,5137,1},
  {0x1D59A,5138,1},
  {0x1D59B,5139,1},
  {0x1D59C,5140,1},
  {0x1D59D,5141,1},
  {0x1D59E,5142,1},
  {0x1D59F,5143,1},
  {0x1D5A0,5144,1},
  {0x1D5A1,5145,1},
  {0x1D5A2,5146,1},
  {0x1D5A3,5147,1},
  {0x1D5A4,5148,1},
  {0x1D5A5,5149,1},
  {0x1D5A6,5150,1},
  {0x1D5A7,5151,1},
  {0x1D5A8,5152,1},
  {0x1D5A9,5153,1},
  {0x1D5AA,5154,1},
  {0x1D5AB,5155,1},
  {0x1D5AC,5156,1},
  {0x1D5AD,5157,1},
  {0x1D5AE,5158,1},
  {0x1D5AF,5159,1},
  {0x1D5B0,5160,1},
  {0x1D5B1,5161,1},
  {0x1D5B2,5162,1},
  {0x1D5B3,5163,1},
  {0x1D5B4,5164,1},
  {0x1D5B5,5165,1},
  {0x1D5B6,5166,1},
  {0x1D5B7,5167,1},
  {0x1D5B8,5168,1},
  {0x1D5B9,5169,1},
  {0x1D5BA,5170,1},
  {0x1D5BB,5171,1},
  {0x1D5BC,5172,1},
  {0x1D5BD,5173,1},
  {0x1D5BE,5174,1},
  {0x1D5BF,5175,1},
  {0x1D5C0,5176,1},
  {0x1D5C1,5177,1},
  {0x1D5C2,5178,1},
  {0x1D5C3,5179,1},
  {0x1D5C4,5180,1},
  {0x1D5C5,5181,1},
  {0x1D5C6,5182,1},
  {0x1D5C7,5183,1},
  {0x1D5C8,5184,1},
  {0x1D5C9,5185,1},
  {0x1D5CA,5186,1},
  {0x1D5CB,5187,1},
  {0x1D5CC,5188,1},
  {0x1D5CD,5189,1},
  {0x1D5CE,5190,1},
  {0x1D5CF,5191,1},
  {0x1D5D0,5192,1},
  {0x1D5D1,5193,1},
  {0x1D5D2,5194,1},
  {0x1D5D3,5195,1},
  {0x1D5D4,5196,1},
  {0x1D5D5,5197,1},
  {0x1D5D6,5198,1},
  {0x1D5D7,5199,1},
  {0x1D5D8,5200,1},
  {0x1D5D9,5201,1},
  {0x1D5DA,5202,1},
  {0x1D5DB,5203,1},
  {0x1D5DC,5204,1},
  {0x1D5DD,5205,1},
  {0x1D5DE,5206,1},
  {0x1D5DF,5207,1},
  {0x1D5E0,5208,1},
  {0x1D5E1,5209,1},
  {0x1D5E2,5210,1},
  {0x1D5E3,5211,1},
  {0x1D5E4,5212,1},
  {0x1D5E5,5213,1},
  {0x1D5E6,5214,1},
  {0x1D5E7,5215,1},
  {0x1D5E8,5216,1},
  {0x1D5E9,5217,1},
  {0x1D5EA,5218,1},
  {0x1D5EB,5219,1},
  {0x1D5EC,5220,1},
  {0x1D5ED,5221,1},
  {0x1D5EE,5222,1},
  {0x1D5EF,5223,1},
  {0x1D5F0,5224,1},
  {0x1D5F1,5225,1},
  {0x1D5F2,5226,1},
  {0x1D5F3,5227,1},
  {0x1D5F4,5228,1},
  {0x1D5F5,5229,1},
  {0x1D5F6,5230,1},
  {0x1D5F7,5231,1},
  {0x1D5F8,5232,1},
  {0x1D5F9,5233,1},
  {0x1D5FA,5234,1},
  {0x1D5FB,5235,1},
  {0x1D5FC,5236,1},
  {0x1D5FD,5237,1},
  {0x1D5FE,5238,1},
  {0x1D5FF,5239,1},
  {0x1D600,5240,1},
  {0x1D601,5241,1},
  {0x1D602,5242,1},
  {0x1D603,5243,1},
  {0x1D604,5244,1},
  {0x1D605,5245,1},
  {0x1D606,5246,1},
  {0x1D607,5247,1},
  {0x1D608,5248,1},
  {0x1D609,5249,1},
  {0x1D60A,5250,1},
  {0x1D60B,5251,1},
  {0x1D60C,5252,1},
  {0x1D60D,5253,1},
  {0x1D60E,5254,1},
  {0x1D60F,5255,1},
  {0x1D610,5256,1},
  {0x1D611,5257,1},
  {0x1D612,5258,1},
  {0x1D613,5259,1},
  {0x1D614,5260,1},
  {0x1D615,5261,1},
  {0x1D616,5262,1},
  {0x1D617,5263,1},
  {0x1D618,5264,1},
  {0x1D619,5265,1},
  {0x1D61A,5266,1},
  {0x1D61B,5267,1},
  {0x1D61C,5268,1},
  {0x1D61D,5269,1},
  {0x1D61E,5270,1},
  {0x1D61F,5271,1},
  {0x1D620,5272,1},
  {0x1D621,5273,1},
  {0x1D622,5274,1},
  {0x1D623,5275,1},
  {0x1D624,5276,1},
  {0x1D625,5277,1},
  {0x1D626,5278,1},
  {0x1D627,5279,1},
  {0x1D628,5280,1},
  {0x1D629,5281,1},
  {0x1D62A,5282,1},
  {0x1D62B,5283,1},
  {0x1D62C,5284,1},
  {0x1D62D,5285,1},
  {0x1D62E,5286,1},
  {0x1D62F,5287,1},
  {0x1D630,5288,1},
  {0x1D631,5289,1},
  {0x1D632,5290,1},
  {0x1D633,5291,1},
  {0x1D634,5292,1},
  {0x1D635,5293,1},
  {0x1D636,5294,1},
  {0x1D637,5295,1},
  {0x1D638,5296,1},
  {0x1D639,5297,1},
  {0x1D63A,5298,1},
  {0x1D63B,5299,1},
  {0x1D63C,5300,1},
  {0x1D63D,5301,1},
  {0x1D63E,5302,1},
  {0x1D63F,5303,1},
  {0x1D640,5304,1},
  {0x1D641,5305,1},
  {0x1D642,5306,1},
  {0x1D643,5307,1},
  {0x1D644,5308,1},
  {0x1D645,5309,1},
  {0x1D646,5310,1},
  {0x1D647,5311,1},
  {0x1D648,5312,1},
  {0x1D649,5313,1},
  {0x1D64A,5314,1},
  {0x1D64B,5315,1},
  {0x1D64C,5316,1},
  {0x1D64D,5317,1},
  {0x1D64E,5318,1},
  {0x1D64F,5319,1},
  {0x1D650,5320,1},
  {0x1D651,5321,1},
  {0x1D652,5322,1},
  {0x1D653,5323,1},
  {0x1D654,5324,1},
  {0x1D655,5325,1},
  {0x1D656,5326,1},
  {0x1D657,5327,1},
  {0x1D658,5328,1},
  {0x1D659,5329,1},
  {0x1D65A,5330,1},
  {0x1D65B,5331,1},
  {0x1D65C,5332,1},
  {0x1D65D,5333,1},
  {0x1D65E,5334,1},
  {0x1D65F,5335,1},
  {0x1D660,5336,1},
  {0x1D661,5337,1},
  {0x1D662,5338,1},
  {0x1D663,5339,1},
  {0x1D664,5340,1},
  {0x1D665,5341,1},
  {0x1D666,5342,1},
  {0x1D667,5343,1},
  {0x1D668,5344,1},
  {0x1D669,5345,1},
  {0x1D66A,5346,1},
  {0x1D66B,5347,1},
  {0x1D66C,5348,1},
  {0x1D66D,5349,1},
  {0x1D66E,5350,1},
  {0x1D66F,5351,1},
  {0x1D670,5352,1},
  {0x1D671,5353,1},
  {0x1D672,5354,1},
  {0x1D673,5355,1},
  {0x1D674,5356,1},
  {0x1D675,5357,1},
  {0x1D676,5358,1},
  {0x1D677,5359,1},
  {0x1D678,5360,1},
  {0x1D679,5361,1},
  {0x1D67A,5362,1},
  {0x1D67B,5363,1},
  {0x1D67C,5364,1},
  {0x1D67D,5365,1},
  {0x1D67E,5366,1},
  {0x1D67F,5367,1},
  {0x1D680,5368,1},
  {0x1D681,5369,1},
  {0x1D682,5370,1},
  {0x1D683,5371,1},
  {0x1D684,5372,1},
  {0x1D685,5373,1},
  {0x1D686,5374,1},
  {0x1D687,5375,1},
  {0x1D688,5376,1},
  {0x1D689,5377,1},
  {0x1D68A,5378,1},
  {0x1D68B,5379,1},
  {0x1D68C,5380,1},
  {0x1D68D,5381,1},
  {0x1D68E,5382,1},
  {0x1D68F,5383,1},
  {0x1D690,5384,1},
  {0x1D691,5385,1},
  {0x1D692,5386,1},
  {0x1D693,5387,1},
  {0x1D694,5388,1},
  {0x1D695,5389,1},
  {0x1D696,5390,1},
  {0x1D697,5391,1},
  {0x1D698,5392,1},
  {0x1D699,5393,1},
  {0x1D69A,5394,1},
  {0x1D69B,5395,1},
  {0x1D69C,5396,1},
  {0x1D69D,5397,1},
  {0x1D69E,5398,1},
  {0x1D69F,5399,1},
  {0x1D6A0,5400,1},
  {0x1D6A1,5401,1},
  {0x1D6A2,5402,1},
  {0x1D6A3,5403,1},
  {0x1D6A4,5404,1},
  {0x1D6A5,5405,1},
  {0x1D6A8,5406,1},
  {0x1D6A9,5407,1},
  {0x1D6AA,5408,1},
  {0x1D6AB,5409,1},
  {0x1D6AC,5410,1},
  {0x1D6AD,5411,1},
  {0x1D6AE,5412,1},
  {0x1D6AF,5413,1},
  {0x1D6B0,5414,1},
  {0x1D6B1,5415,1},
  {0x1D6B2,5416,1},
  {0x1D6B3,5417,1},
  {0x1D6B4,5418,1},
  {0x1D6B5,5419,1},
  {0x1D6B6,5420,1},
  {0x1D6B7,5421,1},
  {0x1D6B8,5422,1},
  {0x1D6B9,5423,1},
  {0x1D6BA,5424,1},
  {0x1D6BB,5425,1},
  {0x1D6BC,5426,1},
  {0x1D6BD,5427,1},
  {0x1D6BE,5428,1},
  {0x1D6BF,5429,1},
  {0x1D6C0,5430,1},
  {0x1D6C1,5431,1},
  {0x1D6C2,5432,1},
  {0x1D6C3,5433,1},
  {0x1D6C4,5434,1},
  {0x1D6C5,5435,1},
  {0x1D6C6,5436,1},
  {0x1D6C7,5437,1},
  {0x1D6C8,5438,1},
  {0x1D6C9,5439,1},
  {0x1D6CA,5440,1},
  {0x1D6CB,5441,1},
  {0x1D6CC,5442,1},
  {0x1D6CD,5443,1},
  {0x1D6CE,5444,1},
  {0x1D6CF,5445,1},
  {0x1D6D0,5446,1},
  {0x1D6D1,5447,1},
  {0x1D6D2,5448,1},
  {0x1D6D3,5449,1},
  {0x1D6D4,5450,1},
  {0x1D6D5,5451,1},
  {0x1D6D6,5452,1},
  {0x1D6D7,5453,1},
  {0x1D6D8,5454,1},
  {0x1D6D9,5455,1},
  {0x1D6DA,5456,1},
  {0x1D6DB,5457,1},
  {0x1D6DC,5458,1},
  {0x1D6DD,5459,1},
  {0x1D6DE,5460,1},
  {0x1D6DF,5461,1},
  {0x1D6E0,5462,1},
  {0x1D6E1,5463,1},
  {0x1D6E2,5464,1},
  {0x1D6E3,5465,1},
  {0x1D6E4,5466,1},
  {0x1D6E5,5467,1},
  {0x1D6E6,5468,1},
  {0x1D6E7,5469,1},
  {0x1D6E8,5470,1},
  {0x1D6E9,5471,1},
  {0x1D6EA,5472,1},
  {0x1D6EB,5473,1},
  {0x1D6EC,5474,1},
  {0x1D6ED,5475,1},
  {0x1D6EE,5476,1},
  {0x1D6EF,5477,1},
  {0x1D6F0,5478,1},
  {0x1D6F1,5479,1},
  {0x1D6F2,5480,1},
  {0x1D6F3,5481,1},
  {0x1D6F4,5482,1},
  {0x1D6F5,5483,1},
  {0x1D6F6,5484,1},
  {0x1D6F7,5485,1},
  {0x1D6F8,5486,1},
  {0x1D6F9,5487,1},
  {0x1D6FA,5488,1},
  {0x1D6FB,5489,1},
  {0x1D6FC,5490,1},
  {0x1D6FD,5491,1},
  {0x1D6FE,5492,1},
  {0x1D6FF,5493,1},
  {0x1D700,5494,1},
  {0x1D701,5495,1},
  {0x1D702,5496,1},
  {0x1D703,5497,1},
  {0x1D704,5498,1},
  {0x1D705,5499,1},
  {0x1D706,5500,1},
  {0x1D707,5501,1},
  {0x1D708,5502,1},
  {0x1D709,5503,1},
  {0x1D70A,5504,1},
  {0x1D70B,5505,1},
  {0x1D70C,5506,1},
  {0x1D70D,5507,1},
  {0x1D70E,5508,1},
  {0x1D70F,5509,1},
  {0x1D710,5510,1},
  {0x1D711,5511,1},
  {0x1D712,5512,1},
  {0x1D713,5513,1},
  {0x1D714,5514,1},
  {0x1D715,5515,1},
  {0x1D716,5516,1},
  {0x1D717,5517,1},
  {0x1D718,5518,1},
  {0x1D719,5519,1},
  {0x1D71A,5520,1},
  {0x1D71B,5521,1},
  {0x1D71C,5522,1},
  {0x1D71D,5523,1},
  {0x1D71E,5524,1},
  {0x1D71F,5525,1},
  {0x1D720,5526,1},
  {0x1D721,5527,1},
  {0x1D722,5528,1},
  {0x1D723,5529,1},
  {0x1D724,5530,1},
  {0x1D725,5531,1},
  {0x1D726,5532,1},
  {0x1D727,5533,1},
  {0x1D728,5534,1},
  {0x1D729,5535,1},
  {0x1D72A,5536,1},
  {0x1D72B,5537,1},
  {0x1D72C,5538,1},
  {0x1D72D,5539,1},
  {0x1D72E,5540,1},
  {0x1D72F,5541,1},
  {0x1D730,5542,1},
  {0x1D731,5543,1},
  {0x1D732,5544,1},
  {0x1D733,5545,1},
  {0x1D734,5546,1},
  {0x1D735,5547,1},
  {0x1D736,5548,1},
  {0x1D737,5549,1},
  {0x1D738,5550,1},
  {0x1D739,5551,1},
  {0x1D73A,5552,1},
  {0x1D73B,5553,1},
  {0x1D73C,5554,1},
  {0x1D73D,5555,1},
  {0x1D73E,5556,1},
  {0x1D73F,5557,1},
  {0x1D740,5558,1},
  {0x1D741,5559,1},
  {0x1D742,5560,1},
  {0x1D743,5561,1},
  {0x1D744,5562,1},
  {0x1D745,5563,1},
  {0x1D746,5564,1},
  {0x1D747,5565,1},
  {0x1D748,5566,1},
  {0x1D749,5567,1},
  {0x1D74A,5568,1},
  {0x1D74B,5569,1},
  {0x1D74C,5570,1},
  {0x1D74D,5571,1},
  {0x1D74E,5572,1},
  {0x1D74F,5573,1},
  {0x1D750,5574,1},
  {0x1D751,5575,1},
  {0x1D752,5576,1},
  {0x1D753,5577,1},
  {0x1D754,5578,1},
  {0x1D755,5579,1},
  {0x1D756,5580,1},
  {0x1D757,5581,1},
  {0x1D758,5582,1},
  {0x1D759,5583,1},
  {0x1D75A,5584,1},
  {0x1D75B,5585,1},
  {0x1D75C,5586,1},
  {0x1D75D,5587,1},
  {0x1D75E,5588,1},
  {0x1D75F,5589,1},
  {0x1D760,5590,1},
  {0x1D761,5591,1},
  {0x1D762,5592,1},
  {0x1D763,5593,1},
  {0x1D764,5594,1},
  {0x1D765,5595,1},
  {0x1D766,5596,1},
  {0x1D767,5597,1},
  {0x1D768,5598,1},
  {0x1D769,5599,1},
  {0x1D76A,5600,1},
  {0x1D76B,5601,1},
  {0x1D76C,5602,1},
  {0x1D76D,5603,1},
  {0x1D76E,5604,1},
  {0x1D76F,5605,1},
  {0x1D770,5606,1},
  {0x1D771,5607,1},
  {0x1D772,5608,1},
  {0x1D773,5609,1},
  {0x1D774,5610,1},
  {0x1D775,5611,1},
  {0x1D776,5612,1},
  {0x1D777,5613,1},
  {0x1D778,5614,1},
  {0x1D779,5615,1},
  {0x1D77A,5616,1},
  {0x1D77B,5617,1},
  {0x1D77C,5618,1},
  {0x1D77D,5619,1},
  {0x1D77E,5620,1},
  {0x1D77F,5621,1},
  {0x1D780,5622,1},
  {0x1D781,5623,1},
  {0x1D782,5624,1},
  {0x1D783,5625,1},
  {0x1D784,5626,1},
  {0x1D785,5627,1},
  {0x1D786,5628,1},
  {0x1D787,5629,1},
  {0x1D788,5630,1},
  {0x1D789,5631,1},
  {0x1D78A,5632,1},
  {0x1D78B,5633,1},
  {0x1D78C,5634,1},
  {0x1D78D,5635,1},
  {0x1D78E,5636,1},
  {0x1D78F,5637,1},
  {0x1D790,5638,1},
  {0x1D791,5639,1},
  {0x1D792,5640,1},
  {0x1D793,5641,1},
  {0x1D794,5642,1},
  {0x1D795,5643,1},
  {0x1D796,5644,1},
  {0x1D797,5645,1},
  {0x1D798,5646,1},
  {0x1D799,5647,1},
  {0x1D79A,5648,1},
  {0x1D79B,5649,1},
  {0x1D79C,5650,1},
  {0x1D79D,5651,1},
  {0x1D79E,5652,1},
  {0x1D79F,5653,1},
  {0x1D7A0,5654,1},
  {0x1D7A1,5655,1},
  {0x1D7A2,5656,1},
  {0x1D7A3,5657,1},
  {0x1D7A4,5658,1},
  {0x1D7A5,5659,1},
  {0x1D7A6,5660,1},
  {0x1D7A7,5661,1},
  {0x1D7A8,5662,1},
  {0x1D7A9,5663,1},
  {0x1D7AA,5664,1},
  {0x1D7AB,5665,1},
  {0x1D7AC,5666,1},
  {0x1D7AD,5667,1},
  {0x1D7AE,5668,1},
  {0x1D7AF,5669,1},
  {0x1D7B0,5670,1},
  {0x1D7B1,5671,1},
  {0x1D7B2,5672,1},
  {0x1D7B3,5673,1},
  {0x1D7B4,5674,1},
  {0x1D7B5,5675,1},
  {0x1D7B6,5676,1},
  {0x1D7B7,5677,1},
  {0x1D7B8,5678,1},
  {0x1D7B9,5679,1},
  {0x1D7BA,5680,1},
  {0x1D7BB,5681,1},
  {0x1D7BC,5682,1},
  {0x1D7BD,5683,1},
  {0x1D7BE,5684,1},
  {0x1D7BF,5685,1},
  {0x1D7C0,5686,1},
  {0x1D7C1,5687,1},
  {0x1D7C2,5688,1},
  {0x1D7C3,5689,1},
  {0x1D7C4,5690,1},
  {0x1D7C5,5691,1},
  {0x1D7C6,5692,1},
  {0x1D7C7,5693,1},
  {0x1D7C8,5694,1},
  {0x1D7C9,5695,1},
  {0x1D7CA,5696,1},
  {0x1D7CB,5697,1},
  {0x1D7CE,5698,1},
  {0x1D7CF,5699,1},
  {0x1D7D0,5700,1},
  {0x1D7D1,5701,1},
  {0x1D7D2,5702,1},
  {0x1D7D3,5703,1},
  {0x1D7D4,5704,1},
  {0x1D7D5,5705,1},
  {0x1D7D6,5706,1},
  {0x1D7D7,5707,1},
  {0x1D7D8,5708,1},
  {0x1D7D9,5709,1},
  {0x1D7DA,5710,1},
  {0x1D7DB,5711,1},
  {0x1D7DC,5712,1},
  {0x1D7DD,5713,1},
  {0x1D7DE,5714,1},
  {0x1D7DF,5715,1},
  {0x1D7E0,5716,1},
  {0x1D7E1,5717,1},
  {0x1D7E2,5718,1},
  {0x1D7E3,5719,1},
  {0x1D7E4,5720,1},
  {0x1D7E5,5721,1},
  {0x1D7E6,5722,1},
  {0x1D7E7,5723,1},
  {0x1D7E8,5724,1},
  {0x1D7E9,5725,1},
  {0x1D7EA,5726,1},
  {0x1D7EB,5727,1},
  {0x1D7EC,5728,1},
  {0x1D7ED,5729,1},
  {0x1D7EE,5730,1},
  {0x1D7EF,5731,1},
  {0x1D7F0,5732,1},
  {0x1D7F1,5733,1},
  {0x1D7F2,5734,1},
  {0x1D7F3,5735,1},
  {0x1D7F4,5736,1},
  {0x1D7F5,5737,1},
  {0x1D7F6,5738,1},
  {0x1D7F7,5739,1},
  {0x1D7F8,5740,1},
  {0x1D7F9,5741,1},
  {0x1D7FA,5742,1},
  {0x1D7FB,5743,1},
  {0x1D7FC,5744,1},
  {0x1D7FD,5745,1},
  {0x1D7FE,5746,1},
  {0x1D7FF,5747,1},
  {0x1EE00,5748,1},
  {0x1EE01,5749,1},
  {0x1EE02,5750,1},
  {0x1EE03,5751,1},
  {0x1EE05,5752,1},
  {0x1EE06,5753,1},
  {0x1EE07,5754,1},
  {0x1EE08,5755,1},
  {0x1EE09,5756,1},
  {0x1EE0A,5757,1},
  {0x1EE0B,5758,1},
  {0x1EE0C,5759,1},
  {0x1EE0D,5760,1},
  {0x1EE0E,5761,1},
  {0x1EE0F,5762,1},
  {0x1EE10,5763,1},
  {0x1EE11,5764,1},
  {0x1EE12,5765,1},
  {0x1EE13,5766,1},
  {0x1EE14,5767,1},
  {0x1EE15,5768,1},
  {0x1EE16,5769,1},
  {0x1EE17,5770,1},
  {0x1EE18,5771,1},
  {0x1EE19,5772,1},
  {0x1EE1A,5773,1},
  {0x1EE1B,5774,1},
  {0x1EE1C,5775,1},
  {0x1EE1D,5776,1},
  {0x1EE1E,5777,1},
  {0x1EE1F,5778,1},
  {0x1EE21,5779,1},
  {0x1EE22,5780,1},
  {0x1EE24,5781,1},
  {0x1EE27,5782,1},
  {0x1EE29,5783,1},
  {0x1EE2A,5784,1},
  {0x1EE2B,5785,1},
  {0x1EE2C,5786,1},
  {0x1EE2D,5787,1},
  {0x1EE2E,5788,1},
  {0x1EE2F,5789,1},
  {0x1EE30,5790,1},
  {0x1EE31,5791,1},
  {0x1EE32,5792,1},
  {0x1EE34,5793,1},
  {0x1EE35,5794,1},
  {0x1EE36,5795,1},
  {0x1EE37,5796,1},
  {0x1EE39,5797,1},
  {0x1EE3B,5798,1},
  {0x1EE42,5799,1},
  {0x1EE47,5800,1},
  {0x1EE49,5801,1},
  {0x1EE4B,5802,1},
  {0x1EE4D,5803,1},
  {0x1EE4E,5804,1},
  {0x1EE4F,5805,1},
  {0x1EE51,5806,1},
  {0x1EE52,5807,1},
  {0x1EE54,5808,1},
  {0x1EE57,5809,1},
  {0x1EE59,5810,1},
  {0x1EE5B,5811,1},
  {0x1EE5D,5812,1},
  {0x1EE5F,5813,1},
  {0x1EE61,5814,1},
  {0x1EE62,5815,1},
  {0x1EE64,5816,1},
  {0x1EE67,5817,1},
  {0x1EE68,5818,1},
  {0x1EE69,5819,1},
  {0x1EE6A,5820,1},
  {0x1EE6C,5821,1},
  {0x1EE6D,5822,1},
  {0x1EE6E,5823,1},
  {0x1EE6F,5824,1},
  {0x1EE70,5825,1},
  {0x1EE71,5826,1},
  {0x1EE72,5827,1},
  {0x1EE74,5828,1},
  {0x1EE75,5829,1},
  {0x1EE76,5830,1},
  {0x1EE77,5831,1},
  {0x1EE79,5832,1},
  {0x1EE7A,5833,1},
  {0x1EE7B,5834,1},
  {0x1EE7C,5835,1},
  {0x1EE7E,5836,1},
  {0x1EE80,5837,1},
  {0x1EE81,5838,1},
  {0x1EE82,5839,1},
  {0x1EE83,5840,1},
  {0x1EE84,5841,1},
  {0x1EE85,5842,1},
  {0x1EE86,5843,1},
  {0x1EE87,5844,1},
  {0x1EE88,5845,1},
  {0x1EE89,5846,1},
  {0x1EE8B,5847,1},
  {0x1EE8C,5848,1},
  {0x1EE8D,5849,1},
  {0x1EE8E,5850,1},
  {0x1EE8F,5851,1},
  {0x1EE90,5852,1},
  {0x1EE91,5853,1},
  {0x1EE92,5854,1},
  {0x1EE93,5855,1},
  {0x1EE94,5856,1},
  {0x1EE95,5857,1},
  {0x1EE96,5858,1},
  {0x1EE97,5859,1},
  {0x1EE98,5860,1},
  {0x1EE99,5861,1},
  {0x1EE9A,5862,1},
  {0x1EE9B,5863,1},
  {0x1EEA1,5864,1},
  {0x1EEA2,5865,1},
  {0x1EEA3,5866,1},
  {0x1EEA5,5867,1},
  {0x1EEA6,5868,1},
  {0x1EEA7,5869,1},
  {0x1EEA8,5870,1},
  {0x1EEA9,5871,1},
  {0x1EEAB,5872,1},
  {0x1EEAC,5873,1},
  {0x1EEAD,5874,1},
  {0x1EEAE,5875,1},
  {0x1EEAF,5876,1},
  {0x1EEB0,5877,1},
  {0x1EEB1,5878,1},
  {0x1EEB2,5879,1},
  {0x1EEB3,5880,1},
  {0x1EEB4,5881,1},
  {0x1EEB5,5882,1},
  {0x1EEB6,5883,1},
  {0x1EEB7,5884,1},
  {0x1EEB8,5885,1},
  {0x1EEB9,5886,1},
  {0x1EEBA,5887,1},
  {0x1EEBB,5888,1},
  {0x1F100,5889,2},
  {0x1F101,5891,2},
  {0x1F102,5893,2},
  {0x1F103,5895,2},
  {0x1F104,5897,2},
  {0x1F105,5899,2},
  {0x1F106,5901,2},
  {0x1F107,5903,2},
  {0x1F108,5905,2},
  {0x1F109,5907,2},
  {0x1F10A,5909,2},
  {0x1F110,5911,3},
  {0x1F111,5914,3},
  {0x1F112,5917,3},
  {0x1F113,5920,3},
  {0x1F114,5923,3},
  {0x1F115,5926,3},
  {0x1F116,5929,3},
  {0x1F117,5932,3},
  {0x1F118,5935,3},
  {0x1F119,5938,3},
  {0x1F11A,5941,3},
  {0x1F11B,5944,3},
  {0x1F11C,5947,3},
  {0x1F11D,5950,3},
  {0x1F11E,5953,3},
  {0x1F11F,5956,3},
  {0x1F120,5959,3},
  {0x1F121,5962,3},
  {0x1F122,5965,3},
  {0x1F123,5968,3},
  {0x1F124,5971,3},
  {0x1F125,5974,3},
  {0x1F126,5977,3},
  {0x1F127,5980,3},
  {0x1F128,5983,3},
  {0x1F129,5986,3},
  {0x1F12A,5989,3},
  {0x1F12B,5992,1},
  {0x1F12C,5993,1},
  {0x1F12D,5994,2},
  {0x1F12E,5996,2},
  {0x1F130,5998,1},
  {0x1F131,5999,1},
  {0x1F132,6000,1},
  {0x1F133,6001,1},
  {0x1F134,6002,1},
  {0x1F135,6003,1},
  {0x1F136,6004,1},
  {0x1F137,6005,1},
  {0x1F138,6006,1},
  {0x1F139,6007,1},
  {0x1F13A,6008,1},
  {0x1F13B,6009,1},
  {0x1F13C,6010,1},
  {0x1F13D,6011,1},
  {0x1F13E,6012,1},
  {0x1F13F,6013,1},
  {0x1F140,6014,1},
  {0x1F141,6015,1},
  {0x1F142,6016,1},
  {0x1F143,6017,1},
  {0x1F144,6018,1},
  {0x1F145,6019,1},
  {0x1F146,6020,1},
  {0x1F147,6021,1},
  {0x1F148,6022,1},
  {0x1F149,6023,1},
  {0x1F14A,6024,2},
  {0x1F14B,6026,2},
  {0x1F14C,6028,2},
  {0x1F14D,6030,2},
  {0x1F14E,6032,3},
  {0x1F14F,6035,2},
  {0x1F16A,6037,2},
  {0x1F16B,6039,2},
  {0x1F16C,6041,2},
  {0x1F190,6043,2},
  {0x1F200,6045,2},
  {0x1F201,6047,2},
  {0x1F202,6049,1},
  {0x1F210,6050,1},
  {0x1F211,6051,1},
  {0x1F212,6052,1},
  {0x1F213,6053,1},
  {0x1F214,6054,1},
  {0x1F215,6055,1},
  {0x1F216,6056,1},
  {0x1F217,6057,1},
  {0x1F218,6058,1},
  {0x1F219,6059,1},
  {0x1F21A,6060,1},
  {0x1F21B,6061,1},
  {0x1F21C,6062,1},
  {0x1F21D,6063,1},
  {0x1F21E,6064,1},
  {0x1F21F,6065,1},
  {0x1F220,6066,1},
  {0x1F221,6067,1},
  {0x1F222,6068,1},
  {0x1F223,6069,1},
  {0x1F224,6070,1},
  {0x1F225,6071,1},
  {0x1F226,6072,1},
  {0x1F227,6073,1},
  {0x1F228,6074,1},
  {0x1F229,6075,1},
  {0x1F22A,6076,1},
  {0x1F22B,6077,1},
  {0x1F22C,6078,1},
  {0x1F22D,6079,1},
  {0x1F22E,6080,1},
  {0x1F22F,6081,1},
  {0x1F230,6082,1},
  {0x1F231,6083,1},
  {0x1F232,6084,1},
  {0x1F233,6085,1},
  {0x1F234,6086,1},
  {0x1F235,6087,1},
  {0x1F236,6088,1},
  {0x1F237,6089,1},
  {0x1F238,6090,1},
  {0x1F239,6091,1},
  {0x1F23A,6092,1},
  {0x1F23B,6093,1},
  {0x1F240,6094,3},
  {0x1F241,6097,3},
  {0x1F242,6100,3},
  {0x1F243,6103,3},
  {0x1F244,6106,3},
  {0x1F245,6109,3},
  {0x1F246,6112,3},
  {0x1F247,6115,3},
  {0x1F248,6118,3},
  {0x1F250,6121,1},
  {0x1F251,6122,1},
  {0x1FBF0,6123,1},
  {0x1FBF1,6124,1},
  {0x1FBF2,6125,1},
  {0x1FBF3,6126,1},
  {0x1FBF4,6127,1},
  {0x1FBF5,6128,1},
  {0x1FBF6,6129,1},
  {0x1FBF7,6130,1},
  {0x1FBF8,6131,1},
  {0x1FBF9,6132,1},
  {0x2F800,6133,1},
  {0x2F801,6134,1},
  {0x2F802,6135,1},
  {0x2F803,6136,1},
  {0x2F804,6137,1},
  {0x2F805,6138,1},
  {0x2F806,6139,1},
  {0x2F807,6140,1},
  {0x2F808,6141,1},
  {0x2F809,6142,1},
  {0x2F80A,6143,1},
  {0x2F80B,6144,1},
  {0x2F80C,6145,1},
  {0x2F80D,6146,1},
  {0x2F80E,6147,1},
  {0x2F80F,6148,1},
  {0x2F810,6149,1},
  {0x2F811,6150,1},
  {0x2F812,6151,1},
  {0x2F813,6152,1},
  {0x2F814,6153,1},
  {0x2F815,6154,1},
  {0x2F816,6155,1},
  {0x2F817,6156,1},
  {0x2F818,6157,1},
  {0x2F819,6158,1},
  {0x2F81A,6159,1},
  {0x2F81B,6160,1},
  {0x2F81C,6161,1},
  {0x2F81D,6162,1},
  {0x2F81E,6163,1},
  {0x2F81F,6164,1},
  {0x2F820,6165,1},
  {0x2F821,6166,1},
  {0x2F822,6167,1},
  {0x2F823,6168,1},
  {0x2F824,6169,1},
  {0x2F825,6170,1},
  {0x2F826,6171,1},
  {0x2F827,6172,1},
  {0x2F828,6173,1},
  {0x2F829,6174,1},
  {0x2F82A,6175,1},
  {0x2F82B,6176,1},
  {0x2F82C,6177,1},
  {0x2F82D,6178,1},
  {0x2F82E,6179,1},
  {0x2F82F,6180,1},
  {0x2F830,6181,1},
  {0x2F831,6182,1},
  {0x2F832,6183,1},
  {0x2F833,6184,1},
  {0x2F834,6185,1},
  {0x2F835,6186,1},
  {0x2F836,6187,1},
  {0x2F837,6188,1},
  {0x2F838,6189,1},
  {0x2F839,6190,1},
  {0x2F83A,6191,1},
  {0x2F83B,6192,1},
  {0x2F83C,6193,1},
  {0x2F83D,6194,1},
  {0x2F83E,6195,1},
  {0x2F83F,6196,1},
  {0x2F840,6197,1},
  {0x2F841,6198,1},
  {0x2F842,6199,1},
  {0x2F843,6200,1},
  {0x2F844,6201,1},
  {0x2F845,6202,1},
  {0x2F846,6203,1},
  {0x2F847,6204,1},
  {0x2F848,6205,1},
  {0x2F849,6206,1},
  {0x2F84A,6207,1},
  {0x2F84B,6208,1},
  {0x2F84C,6209,1},
  {0x2F84D,6210,1},
  {0x2F84E,6211,1},
  {0x2F84F,6212,1},
  {0x2F850,6213,1},
  {0x2F851,6214,1},
  {0x2F852,6215,1},
  {0x2F853,6216,1},
  {0x2F854,6217,1},
  {0x2F855,6218,1},
  {0x2F856,6219,1},
  {0x2F857,6220,1},
  {0x2F858,6221,1},
  {0x2F859,6222,1},
  {0x2F85A,6223,1},
  {0x2F85B,6224,1},
  {0x2F85C,6225,1},
  {0x2F85D,6226,1},
  {0x2F85E,6227,1},
  {0x2F85F,6228,1},
  {0x2F860,6229,1},
  {0x2F861,6230,1},
  {0x2F862,6231,1},
  {0x2F863,6232,1},
  {0x2F864,6233,1},
  {0x2F865,6234,1},
  {0x2F866,6235,1},
  {0x2F867,6236,1},
  {0x2F868,6237,1},
  {0x2F869,6238,1},
  {0x2F86A,6239,1},
  {0x2F86B,6240,1},
  {0x2F86C,6241,1},
  {0x2F86D,6242,1},
  {0x2F86E,6243,1},
  {0x2F86F,6244,1},
  {0x2F870,6245,1},
  {0x2F871,6246,1},
  {0x2F872,6247,1},
  {0x2F873,6248,1},
  {0x2F874,6249,1},
  {0x2F875,6250,1},
  {0x2F876,6251,1},
  {0x2F877,6252,1},
  {0x2F878,6253,1},
  {0x2F879,6254,1},
  {0x2F87A,6255,1},
  {0x2F87B,6256,1},
  {0x2F87C,6257,1},
  {0x2F87D,6258,1},
  {0x2F87E,6259,1},
  {0x2F87F,6260,1},
  {0x2F880,6261,1},
  {0x2F881,6262,1},
  {0x2F882,6263,1},
  {0x2F883,6264,1},
  {0x2F884,6265,1},
  {0x2F885,6266,1},
  {0x2F886,6267,1},
  {0x2F887,6268,1},
  {0x2F888,6269,1},
  {0x2F889,6270,1},
  {0x2F88A,6271,1},
  {0x2F88B,6272,1},
  {0x2F88C,6273,1},
  {0x2F88D,6274,1},
  {0x2F88E,6275,1},
  {0x2F88F,6276,1},
  {0x2F890,6277,1},
  {0x2F891,6278,1},
  {0x2F892,6279,1},
  {0x2F893,6280,1},
  {0x2F894,6281,1},
  {0x2F895,6282,1},
  {0x2F896,6283,1},
  {0x2F897,6284,1},
  {0x2F898,6285,1},
  {0x2F899,6286,1},
  {0x2F89A,6287,1},
  {0x2F89B,6288,1},
  {0x2F89C,6289,1},
  {0x2F89D,6290,1},
  {0x2F89E,6291,1},
  {0x2F89F,6292,1},
  {0x2F8A0,6293,1},
  {0x2F8A1,6294,1},
  {0x2F8A2,6295,1},
  {0x2F8A3,6296,1},
  {0x2F8A4,6297,1},
  {0x2F8A5,6298,1},
  {0x2F8A6,6299,1},
  {0x2F8A7,6300,1},
  {0x2F8A8,6301,1},
  {0x2F8A9,6302,1},
  {0x2F8AA,6303,1},
  {0x2F8AB,6304,1},
  {0x2F8AC,6305,1},
  {0x2F8AD,6306,1},
  {0x2F8AE,6307,1},
  {0x2F8AF,6308,1},
  {0x2F8B0,6309,1},
  {0x2F8B1,6310,1},
  {0x2F8B2,6311,1},
  {0x2F8B3,6312,1},
  {0x2F8B4,6313,1},
  {0x2F8B5,6314,1},
  {0x2F8B6,6315,1},
  {0x2F8B7,6316,1},
  {0x2F8B8,6317,1},
  {0x2F8B9,6318,1},
  {0x2F8BA,6319,1},
  {0x2F8BB,6320,1},
  {0x2F8BC,6321,1},
  {0x2F8BD,6322,1},
  {0x2F8BE,6323,1},
  {0x2F8BF,6324,1},
  {0x2F8C0,6325,1},
  {0x2F8C1,6326,1},
  {0x2F8C2,6327,1},
  {0x2F8C3,6328,1},
  {0x2F8C4,6329,1},
  {0x2F8C5,6330,1},
  {0x2F8C6,6331,1},
  {0x2F8C7,6332,1},
  {0x2F8C8,6333,1},
  {0x2F8C9,6334,1},
  {0x2F8CA,6335,1},
  {0x2F8CB,6336,1},
  {0x2F8CC,6337,1},
  {0x2F8CD,6338,1},
  {0x2F8CE,6339,1},
  {0x2F8CF,6340,1},
  {0x2F8D0,6341,1},
  {0x2F8D1,6342,1},
  {0x2F8D2,6343,1},
  {0x2F8D3,6344,1},
  {0x2F8D4,6345,1},
  {0x2F8D5,6346,1},
  {0x2F8D6,6347,1},
  {0x2F8D7,6348,1},
  {0x2F8D8,6349,1},
  {0x2F8D9,6350,1},
  {0x2F8DA,6351,1},
  {0x2F8DB,6352,1},
  {0x2F8DC,6353,1},
  {0x2F8DD,6354,1},
  {0x2F8DE,6355,1},
  {0x2F8DF,6356,1},
  {0x2F8E0,6357,1},
  {0x2F8E1,6358,1},
  {0x2F8E2,6359,1},
  {0x2F8E3,6360,1},
  {0x2F8E4,6361,1},
  {0x2F8E5,6362,1},
  {0x2F8E6,6363,1},
  {0x2F8E7,6364,1},
  {0x2F8E8,6365,1},
  {0x2F8E9,6366,1},
  {0x2F8EA,6367,1},
  {0x2F8EB,6368,1},
  {0x2F8EC,6369,1},
  {0x2F8ED,6370,1},
  {0x2F8EE,6371,1},
  {0x2F8EF,6372,1},
  {0x2F8F0,6373,1},
  {0x2F8F1,6374,1},
  {0x2F8F2,6375,1},
  {0x2F8F3,6376,1},
  {0x2F8F4,6377,1},
  {0x2F8F5,6378,1},
  {0x2F8F6,6379,1},
  {0x2F8F7,6380,1},
  {0x2F8F8,6381,1},
  {0x2F8F9,6382,1},
  {0x2F8FA,6383,1},
  {0x2F8FB,6384,1},
  {0x2F8FC,6385,1},
  {0x2F8FD,6386,1},
  {0x2F8FE,6387,1},
  {0x2F8FF,6388,1},
  {0x2F900,6389,1},
  {0x2F901,6390,1},
  {0x2F902,6391,1},
  {0x2F903,6392,1},
  {0x2F904,6393,1},
  {0x2F905,6394,1},
  {0x2F906,6395,1},
  {0x2F907,6396,1},
  {0x2F908,6397,1},
  {0x2F909,6398,1},
  {0x2F90A,6399,1},
  {0x2F90B,6400,1},
  {0x2F90C,6401,1},
  {0x2F90D,6402,1},
  {0x2F90E,6403,1},
  {0x2F90F,6404,1},
  {0x2F910,6405,1},
  {0x2F911,6406,1},
  {0x2F912,6407,1},
  {0x2F913,6408,1},
  {0x2F914,6409,1},
  {0x2F915,6410,1},
  {0x2F916,6411,1},
  {0x2F917,6412,1},
  {0x2F918,6413,1},
  {0x2F919,6414,1},
  {0x2F91A,6415,1},
  {0x2F91B,6416,1},
  {0x2F91C,6417,1},
  {0x2F91D,6418,1},
  {0x2F91E,6419,1},
  {0x2F91F,6420,1},
  {0x2F920,6421,1},
  {0x2F921,6422,1},
  {0x2F922,6423,1},
  {0x2F923,6424,1},
  {0x2F924,6425,1},
  {0x2F925,6426,1},
  {0x2F926,6427,1},
  {0x2F927,6428,1},
  {0x2F928,6429,1},
  {0x2F929,6430,1},
  {0x2F92A,6431,1},
  {0x2F92B,6432,1},
  {0x2F92C,6433,1},
  {0x2F92D,6434,1},
  {0x2F92E,6435,1},
  {0x2F92F,6436,1},
  {0x2F930,6437,1},
  {0x2F931,6438,1},
  {0x2F932,6439,1},
  {0x2F933,6440,1},
  {0x2F934,6441,1},
  {0x2F935,6442,1},
  {0x2F936,6443,1},
  {0x2F937,6444,1},
  {0x2F938,6445,1},
  {0x2F939,6446,1},
  {0x2F93A,6447,1},
  {0x2F93B,6448,1},
  {0x2F93C,6449,1},
  {0x2F93D,6450,1},
  {0x2F93E,6451,1},
  {0x2F93F,6452,1},
  {0x2F940,6453,1},
  {0x2F941,6454,1},
  {0x2F942,6455,1},
  {0x2F943,6456,1},
  {0x2F944,6457,1},
  {0x2F945,6458,1},
  {0x2F946,6459,1},
  {0x2F947,6460,1},
  {0x2F948,6461,1},
  {0x2F949,6462,1},
  {0x2F94A,6463,1},
  {0x2F94B,6464,1},
  {0x2F94C,6465,1},
  {0x2F94D,6466,1},
  {0x2F94E,6467,1},
  {0x2F94F,6468,1},
  {0x2F950,6469,1},
  {0x2F951,6470,1},
  {0x2F952,6471,1},
  {0x2F953,6472,1},
  {0x2F954,6473,1},
  {0x2F955,6474,1},
  {0x2F956,6475,1},
  {0x2F957,6476,1},
  {0x2F958,6477,1},
  {0x2F959,6478,1},
  {0x2F95A,6479,1},
  {0x2F95B,6480,1},
  {0x2F95C,6481,1},
  {0x2F95D,6482,1},
  {0x2F95E,6483,1},
  {0x2F95F,6484,1},
  {0x2F960,6485,1},
  {0x2F961,6486,1},
  {0x2F962,6487,1},
  {0x2F963,6488,1},
  {0x2F964,6489,1},
  {0x2F965,6490,1},
  {0x2F966,6491,1},
  {0x2F967,6492,1},
  {0x2F968,6493,1},
  {0x2F969,6494,1},
  {0x2F96A,6495,1},
  {0x2F96B,6496,1},
  {0x2F96C,6497,1},
  {0x2F96D,6498,1},
  {0x2F96E,6499,1},
  {0x2F96F,6500,1},
  {0x2F970,6501,1},
  {0x2F971,6502,1},
  {0x2F972,6503,1},
  {0x2F973,6504,1},
  {0x2F974,6505,1},
  {0x2F975,6506,1},
  {0x2F976,6507,1},
  {0x2F977,6508,1},
  {0x2F978,6509,1},
  {0x2F979,6510,1},
  {0x2F97A,6511,1},
  {0x2F97B,6512,1},
  {0x2F97C,6513,1},
  {0x2F97D,6514,1},
  {0x2F97E,6515,1},
  {0x2F97F,6516,1},
  {0x2F980,6517,1},
  {0x2F981,6518,1},
  {0x2F982,6519,1},
  {0x2F983,6520,1},
  {0x2F984,6521,1},
  {0x2F985,6522,1},
  {0x2F986,6523,1},
  {0x2F987,6524,1},
  {0x2F988,6525,1},
  {0x2F989,6526,1},
  {0x2F98A,6527,1},
  {0x2F98B,6528,1},
  {0x2F98C,6529,1},
  {0x2F98D,6530,1},
  {0x2F98E,6531,1},
  {0x2F98F,6532,1},
  {0x2F990,6533,1},
  {0x2F991,6534,1},
  {0x2F992,6535,1},
  {0x2F993,6536,1},
  {0x2F994,6537,1},
  {0x2F995,6538,1},
  {0x2F996,6539,1},
  {0x2F997,6540,1},
  {0x2F998,6541,1},
  {0x2F999,6542,1},
  {0x2F99A,6543,1},
  {0x2F99B,6544,1},
  {0x2F99C,6545,1},
  {0x2F99D,6546,1},
  {0x2F99E,6547,1},
  {0x2F99F,6548,1},
  {0x2F9A0,6549,1},
  {0x2F9A1,6550,1},
  {0x2F9A2,6551,1},
  {0x2F9A3,6552,1},
  {0x2F9A4,6553,1},
  {0x2F9A5,6554,1},
  {0x2F9A6,6555,1},
  {0x2F9A7,6556,1},
  {0x2F9A8,6557,1},
  {0x2F9A9,6558,1},
  {0x2F9AA,6559,1},
  {0x2F9AB,6560,1},
  {0x2F9AC,6561,1},
  {0x2F9AD,6562,1},
  {0x2F9AE,6563,1},
  {0x2F9AF,6564,1},
  {0x2F9B0,6565,1},
  {0x2F9B1,6566,1},
  {0x2F9B2,6567,1},
  {0x2F9B3,6568,1},
  {0x2F9B4,6569,1},
  {0x2F9B5,6570,1},
  {0x2F9B6,6571,1},
  {0x2F9B7,6572,1},
  {0x2F9B8,6573,1},
  {0x2F9B9,6574,1},
  {0x2F9BA,6575,1},
  {0x2F9BB,6576,1},
  {0x2F9BC,6577,1},
  {0x2F9BD,6578,1},
  {0x2F9BE,6579,1},
  {0x2F9BF,6580,1},
  {0x2F9C0,6581,1},
  {0x2F9C1,6582,1},
  {0x2F9C2,6583,1},
  {0x2F9C3,6584,1},
  {0x2F9C4,6585,1},
  {0x2F9C5,6586,1},
  {0x2F9C6,6587,1},
  {0x2F9C7,6588,1},
  {0x2F9C8,6589,1},
  {0x2F9C9,6590,1},
  {0x2F9CA,6591,1},
  {0x2F9CB,6592,1},
  {0x2F9CC,6593,1},
  {0x2F9CD,6594,1},
  {0x2F9CE,6595,1},
  {0x2F9CF,6596,1},
  {0x2F9D0,6597,1},
  {0x2F9D1,6598,1},
  {0x2F9D2,6599,1},
  {0x2F9D3,6600,1},
  {0x2F9D4,6601,1},
  {0x2F9D5,6602,1},
  {0x2F9D6,6603,1},
  {0x2F9D7,6604,1},
  {0x2F9D8,6605,1},
  {0x2F9D9,6606,1},
  {0x2F9DA,6607,1},
  {0x2F9DB,6608,1},
  {0x2F9DC,6609,1},
  {0x2F9DD,6610,1},
  {0x2F9DE,6611,1},
  {0x2F9DF,6612,1},
  {0x2F9E0,6613,1},
  {0x2F9E1,6614,1},
  {0x2F9E2,6615,1},
  {0x2F9E3,6616,1},
  {0x2F9E4,6617,1},
  {0x2F9E5,6618,1},
  {0x2F9E6,6619,1},
  {0x2F9E7,6620,1},
  {0x2F9E8,6621,1},
  {0x2F9E9,6622,1},
  {0x2F9EA,6623,1},
  {0x2F9EB,6624,1},
  {0x2F9EC,6625,1},
  {0x2F9ED,6626,1},
  {0x2F9EE,6627,1},
  {0x2F9EF,6628,1},
  {0x2F9F0,6629,1},
  {0x2F9F1,6630,1},
  {0x2F9F2,6631,1},
  {0x2F9F3,6632,1},
  {0x2F9F4,6633,1},
  {0x2F9F5,6634,1},
  {0x2F9F6,6635,1},
  {0x2F9F7,6636,1},
  {0x2F9F8,6637,1},
  {0x2F9F9,6638,1},
  {0x2F9FA,6639,1},
  {0x2F9FB,6640,1},
  {0x2F9FC,6641,1},
  {0x2F9FD,6642,1},
  {0x2F9FE,6643,1},
  {0x2F9FF,6644,1},
  {0x2FA00,6645,1},
  {0x2FA01,6646,1},
  {0x2FA02,6647,1},
  {0x2FA03,6648,1},
  {0x2FA04,6649,1},
  {0x2FA05,6650,1},
  {0x2FA06,6651,1},
  {0x2FA07,6652,1},
  {0x2FA08,6653,1},
  {0x2FA09,6654,1},
  {0x2FA0A,6655,1},
  {0x2FA0B,6656,1},
  {0x2FA0C,6657,1},
  {0x2FA0D,6658,1},
  {0x2FA0E,6659,1},
  {0x2FA0F,6660,1},
  {0x2FA10,6661,1},
  {0x2FA11,6662,1},
  {0x2FA12,6663,1},
  {0x2FA13,6664,1},
  {0x2FA14,6665,1},
  {0x2FA15,6666,1},
  {0x2FA16,6667,1},
  {0x2FA17,6668,1},
  {0x2FA18,6669,1},
  {0x2FA19,6670,1},
  {0x2FA1A,6671,1},
  {0x2FA1B,6672,1},
  {0x2FA1C,6673,1},
  {0x2FA1D,6674,1},
};
const std::size_t kNfkcEntryCount = 4807;

const char32_t kNfkcPool[] = {
  0x20,0x20,0x308,0x61,0x20,0x304,0x32,0x33,0x20,0x301,0x3BC,0x20,
  0x327,0x31,0x6F,0x31,0x2044,0x34,0x31,0x2044,0x32,0x33,0x2044,0x34,
  0x49,0x4A,0x69,0x6A,0x4C,0xB7,0x6C,0xB7,0x2BC,0x6E,0x73,0x44,
  0x17D,0x44,0x17E,0x64,0x17E,0x4C,0x4A,0x4C,0x6A,0x6C,0x6A,0x4E,
  0x4A,0x4E,0x6A,0x6E,0x6A,0x44,0x5A,0x44,0x7A,0x64,0x7A,0x68,
  0x266,0x6A,0x72,0x279,0x27B,0x281,0x77,0x79,0x20,0x306,0x20,0x307,
  0x20,0x30A,0x20,0x328,0x20,0x303,0x20,0x30B,0x263,0x6C,0x73,0x78,
  0x295,0x300,0x301,0x313,0x308,0x301,0x2B9,0x20,0x345,0x3B,0x20,0x301,
  0x20,0x308,0x301,0xB7,0x3B2,0x3B8,0x3A5,0x38E,0x3AB,0x3C6,0x3C0,0x3BA,
  0x3C1,0x3C2,0x398,0x3B5,0x3A3,0x565,0x582,0x627,0x674,0x648,0x674,0x6C7,
  0x674,0x64A,0x674,0x915,0x93C,0x916,0x93C,0x917,0x93C,0x91C,0x93C,0x921,
  0x93C,0x922,0x93C,0x92B,0x93C,0x92F,0x93C,0x9A1,0x9BC,0x9A2,0x9BC,0x9AF,
  0x9BC,0xA32,0xA3C,0xA38,0xA3C,0xA16,0xA3C,0xA17,0xA3C,0xA1C,0xA3C,0xA2B,
  0xA3C,0xB21,0xB3C,0xB22,0xB3C,0xE4D,0xE32,0xECD,0xEB2,0xEAB,0xE99,0xEAB,
  0xEA1,0xF0B,0xF42,0xFB7,0xF4C,0xFB7,0xF51,0xFB7,0xF56,0xFB7,0xF5B,0xFB7,
  0xF40,0xFB5,0xF71,0xF72,0xF71,0xF74,0xFB2,0xF80,0xFB2,0xF71,0xF80,0xFB3,
  0xF80,0xFB3,0xF71,0xF80,0xF71,0xF80,0xF92,0xFB7,0xF9C,0xFB7,0xFA1,0xFB7,
  0xFA6,0xFB7,0xFAB,0xFB7,0xF90,0xFB5,0x10DC,0x41,0xC6,0x42,0x44,0x45,
  0x18E,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x222,0x50,
  0x52,0x54,0x55,0x57,0x61,0x250,0x251,0x1D02,0x62,0x64,0x65,0x259,
  0x25B,0x25C,0x67,0x6B,0x6D,0x14B,0x6F,0x254,0x1D16,0x1D17,0x70,0x74,
  0x75,0x1D1D,0x26F,0x76,0x1D25,0x3B2,0x3B3,0x3B4,0x3C6,0x3C7,0x69,0x72,
  0x75,0x76,0x3B2,0x3B3,0x3C1,0x3C6,0x3C7,0x43D,0x252,0x63,0x255,0xF0,
  0x25C,0x66,0x25F,0x261,0x265,0x268,0x269,0x26A,0x1D7B,0x29D,0x26D,0x1D85,
  0x29F,0x271,0x270,0x272,0x273,0x274,0x275,0x278,0x282,0x283,0x1AB,0x289,
  0x28A,0x1D1C,0x28B,0x28C,0x7A,0x290,0x291,0x292,0x3B8,0x61,0x2BE,0x1E61,
  0x3AC,0x3AD,0x3AE,0x3AF,0x3CC,0x3CD,0x3CE,0x386,0x20,0x313,0x3B9,0x20,
  0x313,0x20,0x342,0x20,0x308,0x342,0x388,0x389,0x20,0x313,0x300,0x20,
  0x313,0x301,0x20,0x313,0x342,0x390,0x38A,0x20,0x314,0x300,0x20,0x314,
  0x301,0x20,0x314,0x342,0x3B0,0x38E,0x20,0x308,0x300,0x20,0x308,0x301,
  0x60,0x38C,0x38F,0x20,0x301,0x20,0x314,0x20,0x20,0x20,0x20,0x20,
  0x20,0x20,0x20,0x20,0x20,0x20,0x2010,0x20,0x333,0x2E,0x2E,0x2E,
  0x2E,0x2E,0x2E,0x20,0x2032,0x2032,0x2032,0x2032,0x2032,0x2035,0x2035,0x2035,
  0x2035,0x2035,0x21,0x21,0x20,0x305,0x3F,0x3F,0x3F,0x21,0x21,0x3F,
  0x2032,0x2032,0x2032,0x2032,0x20,0x30,0x69,0x34,0x35,0x36,0x37,0x38,
  0x39,0x2B,0x2212,0x3D,0x28,0x29,0x6E,0x30,0x31,0x32,0x33,0x34,
  0x35,0x36,0x37,0x38,0x39,0x2B,0x2212,0x3D,0x28,0x29,0x61,0x65,
  0x6F,0x78,0x259,0x68,0x6B,0x6C,0x6D,0x6E,0x70,0x73,0x74,0x52,
  0x73,0x61,0x2F,0x63,0x61,0x2F,0x73,0x43,0xB0,0x43,0x63,0x2F,
  0x6F,0x63,0x2F,0x75,0x190,0xB0,0x46,0x67,0x48,0x48,0x48,0x68,
  0x127,0x49,0x49,0x4C,0x6C,0x4E,0x4E,0x6F,0x50,0x51,0x52,0x52,
  0x52,0x53,0x4D,0x54,0x45,0x4C,0x54,0x4D,0x5A,0x3A9,0x5A,0x4B,
  0xC5,0x42,0x43,0x65,0x45,0x46,0x4D,0x6F,0x5D0,0x5D1,0x5D2,0x5D3,
  0x69,0x46,0x41,0x58,0x3C0,0x3B3,0x393,0x3A0,0x2211,0x44,0x64,0x65,
  0x69,0x6A,0x31,0x2044,0x37,0x31,0x2044,0x39,0x31,0x2044,0x31,0x30,
  0x31,0x2044,0x33,0x32,0x2044,0x33,0x31,0x2044,0x35,0x32,0x2044,0x35,
  0x33,0x2044,0x35,0x34,0x2044,0x35,0x31,0x2044,0x36,0x35,0x2044,0x36,
  0x31,0x2044,0x38,0x33,0x2044,0x38,0x35,0x2044,0x38,0x37,0x2044,0x38,
  0x31,0x2044,0x49,0x49,0x49,0x49,0x49,0x49,0x49,0x56,0x56,0x56,
  0x49,0x56,0x49,0x49,0x56,0x49,0x49,0x49,0x49,0x58,0x58,0x58,
  0x49,0x58,0x49,0x49,0x4C,0x43,0x44,0x4D,0x69,0x69,0x69,0x69,
  0x69,0x69,0x69,0x76,0x76,0x76,0x69,0x76,0x69,0x69,0x76,0x69,
  0x69,0x69,0x69,0x78,0x78,0x78,0x69,0x78,0x69,0x69,0x6C,0x63,
  0x64,0x6D,0x30,0x2044,0x33,0x222B,0x222B,0x222B,0x222B,0x222B,0x222E,0x222E,
  0x222E,0x222E,0x222E,0x3008,0x3009,0x31,0x32,0x33,0x34,0x35,0x36,0x37,
  0x38,0x39,0x31,0x30,0x31,0x31,0x31,0x32,0x31,0x33,0x31,0x34,
  0x31,0x35,0x31,0x36,0x31,0x37,0x31,0x38,0x31,0x39,0x32,0x30,
  0x28,0x31,0x29,0x28,0x32,0x29,0x28,0x33,0x29,0x28,0x34,0x29,
  0x28,0x35,0x29,0x28,0x36,0x29,0x28,0x37,0x29,0x28,0x38,0x29,
  0x28,0x39,0x29,0x28,0x31,0x30,0x29,0x28,0x31,0x31,0x29,0x28,
  0x31,0x32,0x29,0x28,0x31,0x33,0x29,0x28,0x31,0x34,0x29,0x28,
  0x31,0x35,0x29,0x28,0x31,0x36,0x29,0x28,0x31,0x37,0x29,0x28,
  0x31,0x38,0x29,0x28,0x31,0x39,0x29,0x28,0x32,0x30,0x29,0x31,
  0x2E,0x32,0x2E,0x33,0x2E,0x34,0x2E,0x35,0x2E,0x36,0x2E,0x37,
  0x2E,0x38,0x2E,0x39,0x2E,0x31,0x30,0x2E,0x31,0x31,0x2E,0x31,
  0x32,0x2E,0x31,0x33,0x2E,0x31,0x34,0x2E,0x31,0x35,0x2E,0x31,
  0x36,0x2E,0x31,0x37,0x2E,0x31,0x38,0x2E,0x31,0x39,0x2E,0x32,
  0x30,0x2E,0x28,0x61,0x29,0x28,0x62,0x29,0x28,0x63,0x29,0x28,
  0x64,0x29,0x28,0x65,0x29,0x28,0x66,0x29,0x28,0x67,0x29,0x28,
  0x68,0x29,0x28,0x69,0x29,0x28,0x6A,0x29,0x28,0x6B,0x29,0x28,
  0x6C,0x29,0x28,0x6D,0x29,0x28,0x6E,0x29,0x28,0x6F,0x29,0x28,
  0x70,0x29,0x28,0x71,0x29,0x28,0x72,0x29,0x28,0x73,0x29,0x28,
  0x74,0x29,0x28,0x75,0x29,0x28,0x76,0x29,0x28,0x77,0x29,0x28,
  0x78,0x29,0x28,0x79,0x29,0x28,0x7A,0x29,0x41,0x42,0x43,0x44,
  0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,
  0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,
  0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,
  0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,
  0x30,0x222B,0x222B,0x222B,0x222B,0x3A,0x3A,0x3D,0x3D,0x3D,0x3D,0x3D,
  0x3D,0x2ADD,0x338,0x6A,0x56,0x2D61,0x6BCD,0x9F9F,0x4E00,0x4E28,0x4E36,0x4E3F,
  0x4E59,0x4E85,0x4E8C,0x4EA0,0x4EBA,0x513F,0x5165,0x516B,0x5182,0x5196,0x51AB,0x51E0,
  0x51F5,0x5200,0x529B,0x52F9,0x5315,0x531A,0x5338,0x5341,0x535C,0x5369,0x5382,0x53B6,
  0x53C8,0x53E3,0x56D7,0x571F,0x58EB,0x5902,0x590A,0x5915,0x5927,0x5973,0x5B50,0x5B80,
  0x5BF8,0x5C0F,0x5C22,0x5C38,0x5C6E,0x5C71,0x5DDB,0x5DE5,0x5DF1,0x5DFE,0x5E72,0x5E7A,
  0x5E7F,0x5EF4,0x5EFE,0x5F0B,0x5F13,0x5F50,0x5F61,0x5F73,0x5FC3,0x6208,0x6236,0x624B,
  0x652F,0x6534,0x6587,0x6597,0x65A4,0x65B9,0x65E0,0x65E5,0x66F0,0x6708,0x6728,0x6B20,
  0x6B62,0x6B79,0x6BB3,0x6BCB,0x6BD4,0x6BDB,0x6C0F,0x6C14,0x6C34,0x706B,0x722A,0x7236,
  0x723B,0x723F,0x7247,0x7259,0x725B,0x72AC,0x7384,0x7389,0x74DC,0x74E6,0x7518,0x751F,
  0x7528,0x7530,0x758B,0x7592,0x7676,0x767D,0x76AE,0x76BF,0x76EE,0x77DB,0x77E2,0x77F3,
  0x793A,0x79B8,0x79BE,0x7A74,0x7ACB,0x7AF9,0x7C73,0x7CF8,0x7F36,0x7F51,0x7F8A,0x7FBD,
  0x8001,0x800C,0x8012,0x8033,0x807F,0x8089,0x81E3,0x81EA,0x81F3,0x81FC,0x820C,0x821B,
  0x821F,0x826E,0x8272,0x8278,0x864D,0x866B,0x8840,0x884C,0x8863,0x897E,0x898B,0x89D2,
  0x8A00,0x8C37,0x8C46,0x8C55,0x8C78,0x8C9D,0x8D64,0x8D70,0x8DB3,0x8EAB,0x8ECA,0x8F9B,
  0x8FB0,0x8FB5,0x9091,0x9149,0x91C6,0x91CC,0x91D1,0x9577,0x9580,0x961C,0x96B6,0x96B9,
  0x96E8,0x9751,0x975E,0x9762,0x9769,0x97CB,0x97ED,0x97F3,0x9801,0x98A8,0x98DB,0x98DF,
  0x9996,0x9999,0x99AC,0x9AA8,0x9AD8,0x9ADF,0x9B25,0x9B2F,0x9B32,0x9B3C,0x9B5A,0x9CE5,
  0x9E75,0x9E7F,0x9EA5,0x9EBB,0x9EC3,0x9ECD,0x9ED1,0x9EF9,0x9EFD,0x9F0E,0x9F13,0x9F20,
  0x9F3B,0x9F4A,0x9F52,0x9F8D,0x9F9C,0x9FA0,0x20,0x3012,0x5341,0x5344,0x5345,0x20,
  0x3099,0x20,0x309A,0x3088,0x308A,0x30B3,0x30C8,0x1100,0x1101,0x11AA,0x1102,0x11AC,
  0x11AD,0x1103,0x1104,0x1105,0x11B0,0x11B1,0x11B2,0x11B3,0x11B4,0x11B5,0x111A,0x1106,
  0x1107,0x1108,0x1121,0x1109,0x110A,0x110B,0x110C,0x110D,0x110E,0x110F,0x1110,0x1111,
  0x1112,0x1161,0x1162,0x1163,0x1164,0x1165,0x1166,0x1167,0x1168,0x1169,0x116A,0x116B,
  0x116C,0x116D,0x116E,0x116F,0x1170,0x1171,0x1172,0x1173,0x1174,0x1175,0x1160,0x1114,
  0x1115,0x11C7,0x11C8,0x11CC,0x11CE,0x11D3,0x11D7,0x11D9,0x111C,0x11DD,0x11DF,0x111D,
  0x111E,0x1120,0x1122,0x1123,0x1127,0x1129,0x112B,0x112C,0x112D,0x112E,0x112F,0x1132,
  0x1136,0x1140,0x1147,0x114C,0x11F1,0x11F2,0x1157,0x1158,0x1159,0x1184,0x1185,0x1188,
  0x1191,0x1192,0x1194,0x119E,0x11A1,0x4E00,0x4E8C,0x4E09,0x56DB,0x4E0A,0x4E2D,0x4E0B,
  0x7532,0x4E59,0x4E19,0x4E01,0x5929,0x5730,0x4EBA,0x28,0x1100,0x29,0x28,0x1102,
  0x29,0x28,0x1103,0x29,0x28,0x1105,0x29,0x28,0x1106,0x29,0x28,0x1107,
  0x29,0x28,0x1109,0x29,0x28,0x110B,0x29,0x28,0x110C,0x29,0x28,0x110E,
  0x29,0x28,0x110F,0x29,0x28,0x1110,0x29,0x28,0x1111,0x29,0x28,0x1112,
  0x29,0x28,0xAC00,0x29,0x28,0xB098,0x29,0x28,0xB2E4,0x29,0x28,0xB77C,
  0x29,0x28,0xB9C8,0x29,0x28,0xBC14,0x29,0x28,0xC0AC,0x29,0x28,0xC544,
  0x29,0x28,0xC790,0x29,0x28,0xCC28,0x29,0x28,0xCE74,0x29,0x28,0xD0C0,
  0x29,0x28,0xD30C,0x29,0x28,0xD558,0x29,0x28,0xC8FC,0x29,0x28,0xC624,
  0xC804,0x29,0x28,0xC624,0xD6C4,0x29,0x28,0x4E00,0x29,0x28,0x4E8C,0x29,
  0x28,0x4E09,0x29,0x28,0x56DB,0x29,0x28,0x4E94,0x29,0x28,0x516D,0x29,
  0x28,0x4E03,0x29,0x28,0x516B,0x29,0x28,0x4E5D,0x29,0x28,0x5341,0x29,
  0x28,0x6708,0x29,0x28,0x706B,0x29,0x28,0x6C34,0x29,0x28,0x6728,0x29,
  0x28,0x91D1,0x29,0x28,0x571F,0x29,0x28,0x65E5,0x29,0x28,0x682A,0x29,
  0x28,0x6709,0x29,0x28,0x793E,0x29,0x28,0x540D,0x29,0x28,0x7279,0x29,
  0x28,0x8CA1,0x29,0x28,0x795D,0x29,0x28,0x52B4,0x29,0x28,0x4EE3,0x29,
  0x28,0x547C,0x29,0x28,0x5B66,0x29,0x28,0x76E3,0x29,0x28,0x4F01,0x29,
  0x28,0x8CC7,0x29,0x28,0x5354,0x29,0x28,0x796D,0x29,0x28,0x4F11,0x29,
  0x28,0x81EA,0x29,0x28,0x81F3,0x29,0x554F,0x5E7C,0x6587,0x7B8F,0x50,0x54,
  0x45,0x32,0x31,0x32,0x32,0x32,0x33,0x32,0x34,0x32,0x35,0x32,
  0x36,0x32,0x37,0x32,0x38,0x32,0x39,0x33,0x30,0x33,0x31,0x33,
  0x32,0x33,0x33,0x33,0x34,0x33,0x35,0x1100,0x1102,0x1103,0x1105,0x1106,
  0x1107,0x1109,0x110B,0x110C,0x110E,0x110F,0x1110,0x1111,0x1112,0xAC00,0xB098,0xB2E4,
  0xB77C,0xB9C8,0xBC14,0xC0AC,0xC544,0xC790,0xCC28,0xCE74,0xD0C0,0xD30C,0xD558,0xCC38,
  0xACE0,0xC8FC,0xC758,0xC6B0,0x4E00,0x4E8C,0x4E09,0x56DB,0x4E94,0x516D,0x4E03,0x516B,
  0x4E5D,0x5341,0x6708,0x706B,0x6C34,0x6728,0x91D1,0x571F,0x65E5,0x682A,0x6709,0x793E,
  0x540D,0x7279,0x8CA1,0x795D,0x52B4,0x79D8,0x7537,0x5973,0x9069,0x512A,0x5370,0x6CE8,
  0x9805,0x4F11,0x5199,0x6B63,0x4E0A,0x4E2D,0x4E0B,0x5DE6,0x53F3,0x533B,0x5B97,0x5B66,
  0x76E3,0x4F01,0x8CC7,0x5354,0x591C,0x33,0x36,0x33,0x37,0x33,0x38,0x33,
  0x39,0x34,0x30,0x34,0x31,0x34,0x32,0x34,0x33,0x34,0x34,0x34,
  0x35,0x34,0x36,0x34,0x37,0x34,0x38,0x34,0x39,0x35,0x30,0x31,
  0x6708,0x32,0x6708,0x33,0x6708,0x34,0x6708,0x35,0x6708,0x36,0x6708,0x37,
  0x6708,0x38,0x6708,0x39,0x6708,0x31,0x30,0x6708,0x31,0x31,0x6708,0x31,
  0x32,0x6708,0x48,0x67,0x65,0x72,0x67,0x65,0x56,0x4C,0x54,0x44,
  0x30A2,0x30A4,0x30A6,0x30A8,0x30AA,0x30AB,0x30AD,0x30AF,0x30B1,0x30B3,0x30B5,0x30B7,
  0x30B9,0x30BB,0x30BD,0x30BF,0x30C1,0x30C4,0x30C6,0x30C8,0x30CA,0x30CB,0x30CC,0x30CD,
  0x30CE,0x30CF,0x30D2,0x30D5,0x30D8,0x30DB,0x30DE,0x30DF,0x30E0,0x30E1,0x30E2,0x30E4,
  0x30E6,0x30E8,0x30E9,0x30EA,0x30EB,0x30EC,0x30ED,0x30EF,0x30F0,0x30F1,0x30F2,0x4EE4,
  0x548C,0x30A2,0x30D1,0x30FC,0x30C8,0x30A2,0x30EB,0x30D5,0x30A1,0x30A2,0x30F3,0x30DA,
  0x30A2,0x30A2,0x30FC,0x30EB,0x30A4,0x30CB,0x30F3,0x30B0,0x30A4,0x30F3,0x30C1,0x30A6,
  0x30A9,0x30F3,0x30A8,0x30B9,0x30AF,0x30FC,0x30C9,0x30A8,0x30FC,0x30AB,0x30FC,0x30AA,
  0x30F3,0x30B9,0x30AA,0x30FC,0x30E0,0x30AB,0x30A4,0x30EA,0x30AB,0x30E9,0x30C3,0x30C8,
  0x30AB,0x30ED,0x30EA,0x30FC,0x30AC,0x30ED,0x30F3,0x30AC,0x30F3,0x30DE,0x30AE,0x30AC,
  0x30AE,0x30CB,0x30FC,0x30AD,0x30E5,0x30EA,0x30FC,0x30AE,0x30EB,0x30C0,0x30FC,0x30AD,
  0x30ED,0x30AD,0x30ED,0x30B0,0x30E9,0x30E0,0x30AD,0x30ED,0x30E1,0x30FC,0x30C8,0x30EB,
  0x30AD,0x30ED,0x30EF,0x30C3,0x30C8,0x30B0,0x30E9,0x30E0,0x30B0,0x30E9,0x30E0,0x30C8,
  0x30F3,0x30AF,0x30EB,0x30BC,0x30A4,0x30ED,0x30AF,0x30ED,0x30FC,0x30CD,0x30B1,0x30FC,
  0x30B9,0x30B3,0x30EB,0x30CA,0x30B3,0x30FC,0x30DD,0x30B5,0x30A4,0x30AF,0x30EB,0x30B5,
  0x30F3,0x30C1,0x30FC,0x30E0,0x30B7,0x30EA,0x30F3,0x30B0,0x30BB,0x30F3,0x30C1,0x30BB,
  0x30F3,0x30C8,0x30C0,0x30FC,0x30B9,0x30C7,0x30B7,0x30C9,0x30EB,0x30C8,0x30F3,0x30CA,
  0x30CE,0x30CE,0x30C3,0x30C8,0x30CF,0x30A4,0x30C4,0x30D1,0x30FC,0x30BB,0x30F3,0x30C8,
  0x30D1,0x30FC,0x30C4,0x30D0,0x30FC,0x30EC,0x30EB,0x30D4,0x30A2,0x30B9,0x30C8,0x30EB,
  0x30D4,0x30AF,0x30EB,0x30D4,0x30B3,0x30D3,0x30EB,0x30D5,0x30A1,0x30E9,0x30C3,0x30C9,
  0x30D5,0x30A3,0x30FC,0x30C8,0x30D6,0x30C3,0x30B7,0x30A7,0x30EB,0x30D5,0x30E9,0x30F3,
  0x30D8,0x30AF,0x30BF,0x30FC,0x30EB,0x30DA,0x30BD,0x30DA,0x30CB,0x30D2,0x30D8,0x30EB,
  0x30C4,0x30DA,0x30F3,0x30B9,0x30DA,0x30FC,0x30B8,0x30D9,0x30FC,0x30BF,0x30DD,0x30A4,
  0x30F3,0x30C8,0x30DC,0x30EB,0x30C8,0x30DB,0x30F3,0x30DD,0x30F3,0x30C9,0x30DB,0x30FC,
  0x30EB,0x30DB,0x30FC,0x30F3,0x30DE,0x30A4,0x30AF,0x30ED,0x30DE,0x30A4,0x30EB,0x30DE,
  0x30C3,0x30CF,0x30DE,0x30EB,0x30AF,0x30DE,0x30F3,0x30B7,0x30E7,0x30F3,0x30DF,0x30AF,
  0x30ED,0x30F3,0x30DF,0x30EA,0x30DF,0x30EA,0x30D0,0x30FC,0x30EB,0x30E1,0x30AC,0x30E1,
  0x30AC,0x30C8,0x30F3,0x30E1,0x30FC,0x30C8,0x30EB,0x30E4,0x30FC,0x30C9,0x30E4,0x30FC,
  0x30EB,0x30E6,0x30A2,0x30F3,0x30EA,0x30C3,0x30C8,0x30EB,0x30EA,0x30E9,0x30EB,0x30D4,
  0x30FC,0x30EB,0x30FC,0x30D6,0x30EB,0x30EC,0x30E0,0x30EC,0x30F3,0x30C8,0x30B2,0x30F3,
  0x30EF,0x30C3,0x30C8,0x30,0x70B9,0x31,0x70B9,0x32,0x70B9,0x33,0x70B9,0x34,
  0x70B9,0x35,0x70B9,0x36,0x70B9,0x37,0x70B9,0x38,0x70B9,0x39,0x70B9,0x31,
  0x30,0x70B9,0x31,0x31,0x70B9,0x31,0x32,0x70B9,0x31,0x33,0x70B9,0x31,
  0x34,0x70B9,0x31,0x35,0x70B9,0x31,0x36,0x70B9,0x31,0x37,0x70B9,0x31,
  0x38,0x70B9,0x31,0x39,0x70B9,0x32,0x30,0x70B9,0x32,0x31,0x70B9,0x32,
  0x32,0x70B9,0x32,0x33,0x70B9,0x32,0x34,0x70B9,0x68,0x50,0x61,0x64,
  0x61,0x41,0x55,0x62,0x61,0x72,0x6F,0x56,0x70,0x63,0x64,0x6D,
  0x64,0x6D,0x32,0x64,0x6D,0x33,0x49,0x55,0x5E73,0x6210,0x662D,0x548C,
  0x5927,0x6B63,0x660E,0x6CBB,0x682A,0x5F0F,0x4F1A,0x793E,0x70,0x41,0x6E,0x41,
  0x3BC,0x41,0x6D,0x41,0x6B,0x41,0x4B,0x42,0x4D,0x42,0x47,0x42,
  0x63,0x61,0x6C,0x6B,0x63,0x61,0x6C,0x70,0x46,0x6E,0x46,0x3BC,
  0x46,0x3BC,0x67,0x6D,0x67,0x6B,0x67,0x48,0x7A,0x6B,0x48,0x7A,
  0x4D,0x48,0x7A,0x47,0x48,0x7A,0x54,0x48,0x7A,0x3BC,0x6C,0x6D,
  0x6C,0x64,0x6C,0x6B,0x6C,0x66,0x6D,0x6E,0x6D,0x3BC,0x6D,0x6D,
  0x6D,0x63,0x6D,0x6B,0x6D,0x6D,0x6D,0x32,0x63,0x6D,0x32,0x6D,
  0x32,0x6B,0x6D,0x32,0x6D,0x6D,0x33,0x63,0x6D,0x33,0x6D,0x33,
  0x6B,0x6D,0x33,0x6D,0x2215,0x73,0x6D,0x2215,0x73,0x32,0x50,0x61,
  0x6B,0x50,0x61,0x4D,0x50,0x61,0x47,0x50,0x61,0x72,0x61,0x64,
  0x72,0x61,0x64,0x2215,0x73,0x72,0x61,0x64,0x2215,0x73,0x32,0x70,
  0x73,0x6E,0x73,0x3BC,0x73,0x6D,0x73,0x70,0x56,0x6E,0x56,0x3BC,
  0x56,0x6D,0x56,0x6B,0x56,0x4D,0x56,0x70,0x57,0x6E,0x57,0x3BC,
  0x57,0x6D,0x57,0x6B,0x57,0x4D,0x57,0x6B,0x3A9,0x4D,0x3A9,0x61,
  0x2E,0x6D,0x2E,0x42,0x71,0x63,0x63,0x63,0x64,0x43,0x2215,0x6B,
  0x67,0x43,0x6F,0x2E,0x64,0x42,0x47,0x79,0x68,0x61,0x48,0x50,
  0x69,0x6E,0x4B,0x4B,0x4B,0x4D,0x6B,0x74,0x6C,0x6D,0x6C,0x6E,
  0x6C,0x6F,0x67,0x6C,0x78,0x6D,0x62,0x6D,0x69,0x6C,0x6D,0x6F,
  0x6C,0x50,0x48,0x70,0x2E,0x6D,0x2E,0x50,0x50,0x4D,0x50,0x52,
  0x73,0x72,0x53,0x76,0x57,0x62,0x56,0x2215,0x6D,0x41,0x2215,0x6D,
  0x31,0x65E5,0x32,0x65E5,0x33,0x65E5,0x34,0x65E5,0x35,0x65E5,0x36,0x65E5,
  0x37,0x65E5,0x38,0x65E5,0x39,0x65E5,0x31,0x30,0x65E5,0x31,0x31,0x65E5,
  0x31,0x32,0x65E5,0x31,0x33,0x65E5,0x31,0x34,0x65E5,0x31,0x35,0x65E5,
  0x31,0x36,0x65E5,0x31,0x37,0x65E5,0x31,0x38,0x65E5,0x31,0x39,0x65E5,
  0x32,0x30,0x65E5,0x32,0x31,0x65E5,0x32,0x32,0x65E5,0x32,0x33,0x65E5,
  0x32,0x34,0x65E5,0x32,0x35,0x65E5,0x32,0x36,0x65E5,0x32,0x37,0x65E5,
  0x32,0x38,0x65E5,0x32,0x39,0x65E5,0x33,0x30,0x65E5,0x33,0x31,0x65E5,
  0x67,0x61,0x6C,0x44A,0x44C,0xA76F,0x126,0x153,0xA727,0xAB37,0x26B,0xAB52,
  0x28D,0x8C48,0x66F4,0x8ECA,0x8CC8,0x6ED1,0x4E32,0x53E5,0x9F9C,0x9F9C,0x5951,0x91D1,
  0x5587,0x5948,0x61F6,0x7669,0x7F85,0x863F,0x87BA,0x88F8,0x908F,0x6A02,0x6D1B,0x70D9,
  0x73DE,0x843D,0x916A,0x99F1,0x4E82,0x5375,0x6B04,0x721B,0x862D,0x9E1E,0x5D50,0x6FEB,
  0x85CD,0x8964,0x62C9,0x81D8,0x881F,0x5ECA,0x6717,0x6D6A,0x72FC,0x90CE,0x4F86,0x51B7,
  0x52DE,0x64C4,0x6AD3,0x7210,0x76E7,0x8001,0x8606,0x865C,0x8DEF,0x9732,0x9B6F,0x9DFA,
  0x788C,0x797F,0x7DA0,0x83C9,0x9304,0x9E7F,0x8AD6,0x58DF,0x5F04,0x7C60,0x807E,0x7262,
  0x78CA,0x8CC2,0x96F7,0x58D8,0x5C62,0x6A13,0x6DDA,0x6F0F,0x7D2F,0x7E37,0x964B,0x52D2,
  0x808B,0x51DC,0x51CC,0x7A1C,0x7DBE,0x83F1,0x9675,0x8B80,0x62CF,0x6A02,0x8AFE,0x4E39,
  0x5BE7,0x6012,0x7387,0x7570,0x5317,0x78FB,0x4FBF,0x5FA9,0x4E0D,0x6CCC,0x6578,0x7D22,
  0x53C3,0x585E,0x7701,0x8449,0x8AAA,0x6BBA,0x8FB0,0x6C88,0x62FE,0x82E5,0x63A0,0x7565,
  0x4EAE,0x5169,0x51C9,0x6881,0x7CE7,0x826F,0x8AD2,0x91CF,0x52F5,0x5442,0x5973,0x5EEC,
  0x65C5,0x6FFE,0x792A,0x95AD,0x9A6A,0x9E97,0x9ECE,0x529B,0x66C6,0x6B77,0x8F62,0x5E74,
  0x6190,0x6200,0x649A,0x6F23,0x7149,0x7489,0x79CA,0x7DF4,0x806F,0x8F26,0x84EE,0x9023,
  0x934A,0x5217,0x52A3,0x54BD,0x70C8,0x88C2,0x8AAA,0x5EC9,0x5FF5,0x637B,0x6BAE,0x7C3E,
  0x7375,0x4EE4,0x56F9,0x5BE7,0x5DBA,0x601C,0x73B2,0x7469,0x7F9A,0x8046,0x9234,0x96F6,
  0x9748,0x9818,0x4F8B,0x79AE,0x91B4,0x96B8,0x60E1,0x4E86,0x50DA,0x5BEE,0x5C3F,0x6599,
  0x6A02,0x71CE,0x7642,0x84FC,0x907C,0x9F8D,0x6688,0x962E,0x5289,0x677B,0x67F3,0x6D41,
  0x6E9C,0x7409,0x7559,0x786B,0x7D10,0x985E,0x516D,0x622E,0x9678,0x502B,0x5D19,0x6DEA,
  0x8F2A,0x5F8B,0x6144,0x6817,0x7387,0x9686,0x5229,0x540F,0x5C65,0x6613,0x674E,0x68A8,
  0x6CE5,0x7406,0x75E2,0x7F79,0x88CF,0x88E1,0x91CC,0x96E2,0x533F,0x6EBA,0x541D,0x71D0,
  0x7498,0x85FA,0x96A3,0x9C57,0x9E9F,0x6797,0x6DCB,0x81E8,0x7ACB,0x7B20,0x7C92,0x72C0,
  0x7099,0x8B58,0x4EC0,0x8336,0x523A,0x5207,0x5EA6,0x62D3,0x7CD6,0x5B85,0x6D1E,0x66B4,
  0x8F3B,0x884C,0x964D,0x898B,0x5ED3,0x5140,0x55C0,0x585A,0x6674,0x51DE,0x732A,0x76CA,
  0x793C,0x795E,0x7965,0x798F,0x9756,0x7CBE,0x7FBD,0x8612,0x8AF8,0x9038,0x90FD,0x98EF,
  0x98FC,0x9928,0x9DB4,0x90DE,0x96B7,0x4FAE,0x50E7,0x514D,0x52C9,0x52E4,0x5351,0x559D,
  0x5606,0x5668,0x5840,0x58A8,0x5C64,0x5C6E,0x6094,0x6168,0x618E,0x61F2,0x654F,0x65E2,
  0x6691,0x6885,0x6D77,0x6E1A,0x6F22,0x716E,0x722B,0x7422,0x7891,0x793E,0x7949,0x7948,
  0x7950,0x7956,0x795D,0x798D,0x798E,0x7A40,0x7A81,0x7BC0,0x7DF4,0x7E09,0x7E41,0x7F72,
  0x8005,0x81ED,0x8279,0x8279,0x8457,0x8910,0x8996,0x8B01,0x8B39,0x8CD3,0x8D08,0x8FB6,
  0x9038,0x96E3,0x97FF,0x983B,0x6075,0x242EE,0x8218,0x4E26,0x51B5,0x5168,0x4F80,0x5145,
  0x5180,0x52C7,0x52FA,0x559D,0x5555,0x5599,0x55E2,0x585A,0x58B3,0x5944,0x5954,0x5A62,
  0x5B28,0x5ED2,0x5ED9,0x5F69,0x5FAD,0x60D8,0x614E,0x6108,0x618E,0x6160,0x61F2,0x6234,
  0x63C4,0x641C,0x6452,0x6556,0x6674,0x6717,0x671B,0x6756,0x6B79,0x6BBA,0x6D41,0x6EDB,
  0x6ECB,0x6F22,0x701E,0x716E,0x77A7,0x7235,0x72AF,0x732A,0x7471,0x7506,0x753B,0x761D,
  0x761F,0x76CA,0x76DB,0x76F4,0x774A,0x7740,0x78CC,0x7AB1,0x7BC0,0x7C7B,0x7D5B,0x7DF4,
  0x7F3E,0x8005,0x8352,0x83EF,0x8779,0x8941,0x8986,0x8996,0x8ABF,0x8AF8,0x8ACB,0x8B01,
  0x8AFE,0x8AED,0x8B39,0x8B8A,0x8D08,0x8F38,0x9072,0x9199,0x9276,0x967C,0x96E3,0x9756,
  0x97DB,0x97FF,0x980B,0x983B,0x9B12,0x9F9C,0x2284A,0x22844,0x233D5,0x3B9D,0x4018,0x4039,
  0x25249,0x25CD0,0x27ED3,0x9F43,0x9F8E,0x66,0x66,0x66,0x69,0x66,0x6C,0x66,
  0x66,0x69,0x66,0x66,0x6C,0x73,0x74,0x73,0x74,0x574,0x576,0x574,
  0x565,0x574,0x56B,0x57E,0x576,0x574,0x56D,0x5D9,0x5B4,0x5F2,0x5B7,0x5E2,
  0x5D0,0x5D3,0x5D4,0x5DB,0x5DC,0x5DD,0x5E8,0x5EA,0x2B,0x5E9,0x5C1,0x5E9,
  0x5C2,0x5E9,0x5BC,0x5C1,0x5E9,0x5BC,0x5C2,0x5D0,0x5B7,0x5D0,0x5B8,0x5D0,
  0x5BC,0x5D1,0x5BC,0x5D2,0x5BC,0x5D3,0x5BC,0x5D4,0x5BC,0x5D5,0x5BC,0x5D6,
  0x5BC,0x5D8,0x5BC,0x5D9,0x5BC,0x5DA,0x5BC,0x5DB,0x5BC,0x5DC,0x5BC,0x5DE,
  0x5BC,0x5E0,0x5BC,0x5E1,0x5BC,0x5E3,0x5BC,0x5E4,0x5BC,0x5E6,0x5BC,0x5E7,
  0x5BC,0x5E8,0x5BC,0x5E9,0x5BC,0x5EA,0x5BC,0x5D5,0x5B9,0x5D1,0x5BF,0x5DB,
  0x5BF,0x5E4,0x5BF,0x5D0,0x5DC,0x671,0x671,0x67B,0x67B,0x67B,0x67B,0x67E,
  0x67E,0x67E,0x67E,0x680,0x680,0x680,0x680,0x67A,0x67A,0x67A,0x67A,0x67F,
  0x67F,0x67F,0x67F,0x679,0x679,0x679,0x679,0x6A4,0x6A4,0x6A4,0x6A4,0x6A6,
  0x6A6,0x6A6,0x6A6,0x684,0x684,0x684,0x684,0x683,0x683,0x683,0x683,0x686,
  0x686,0x686,0x686,0x687,0x687,0x687,0x687,0x68D,0x68D,0x68C,0x68C,0x68E,
  0x68E,0x688,0x688,0x698,0x698,0x691,0x691,0x6A9,0x6A9,0x6A9,0x6A9,0x6AF,
  0x6AF,0x6AF,0x6AF,0x6B3,0x6B3,0x6B3,0x6B3,0x6B1,0x6B1,0x6B1,0x6B1,0x6BA,
  0x6BA,0x6BB,0x6BB,0x6BB,0x6BB,0x6C0,0x6C0,0x6C1,0x6C1,0x6C1,0x6C1,0x6BE,
  0x6BE,0x6BE,0x6BE,0x6D2,0x6D2,0x6D3,0x6D3,0x6AD,0x6AD,0x6AD,0x6AD,0x6C7,
  0x6C7,0x6C6,0x6C6,0x6C8,0x6C8,0x6C7,0x674,0x6CB,0x6CB,0x6C5,0x6C5,0x6C9,
  0x6C9,0x6D0,0x6D0,0x6D0,0x6D0,0x649,0x649,0x626,0x627,0x626,0x627,0x626,
  0x6D5,0x626,0x6D5,0x626,0x648,0x626,0x648,0x626,0x6C7,0x626,0x6C7,0x626,
  0x6C6,0x626,0x6C6,0x626,0x6C8,0x626,0x6C8,0x626,0x6D0,0x626,0x6D0,0x626,
  0x6D0,0x626,0x649,0x626,0x649,0x626,0x649,0x6CC,0x6CC,0x6CC,0x6CC,0x626,
  0x62C,0x626,0x62D,0x626,0x645,0x626,0x649,0x626,0x64A,0x628,0x62C,0x628,
  0x62D,0x628,0x62E,0x628,0x645,0x628,0x649,0x628,0x64A,0x62A,0x62C,0x62A,
  0x62D,0x62A,0x62E,0x62A,0x645,0x62A,0x649,0x62A,0x64A,0x62B,0x62C,0x62B,
  0x645,0x62B,0x649,0x62B,0x64A,0x62C,0x62D,0x62C,0x645,0x62D,0x62C,0x62D,
  0x645,0x62E,0x62C,0x62E,0x62D,0x62E,0x645,0x633,0x62C,0x633,0x62D,0x633,
  0x62E,0x633,0x645,0x635,0x62D,0x635,0x645,0x636,0x62C,0x636,0x62D,0x636,
  0x62E,0x636,0x645,0x637,0x62D,0x637,0x645,0x638,0x645,0x639,0x62C,0x639,
  0x645,0x63A,0x62C,0x63A,0x645,0x641,0x62C,0x641,0x62D,0x641,0x62E,0x641,
  0x645,0x641,0x649,0x641,0x64A,0x642,0x62D,0x642,0x645,0x642,0x649,0x642,
  0x64A,0x643,0x627,0x643,0x62C,0x643,0x62D,0x643,0x62E,0x643,0x644,0x643,
  0x645,0x643,0x649,0x643,0x64A,0x644,0x62C,0x644,0x62D,0x644,0x62E,0x644,
  0x645,0x644,0x649,0x644,0x64A,0x645,0x62C,0x645,0x62D,0x645,0x62E,0x645,
  0x645,0x645,0x649,0x645,0x64A,0x646,0x62C,0x646,0x62D,0x646,0x62E,0x646,
  0x645,0x646,0x649,0x646,0x64A,0x647,0x62C,0x647,0x645,0x647,0x649,0x647,
  0x64A,0x64A,0x62C,0x64A,0x62D,0x64A,0x62E,0x64A,0x645,0x64A,0x649,0x64A,
  0x64A,0x630,0x670,0x631,0x670,0x649,0x670,0x20,0x64C,0x651,0x20,0x64D,
  0x651,0x20,0x64E,0x651,0x20,0x64F,0x651,0x20,0x650,0x651,0x20,0x651,
  0x670,0x626,0x631,0x626,0x632,0x626,0x645,0x626,0x646,0x626,0x649,0x626,
  0x64A,0x628,0x631,0x628,0x632,0x628,0x645,0x628,0x646,0x628,0x649,0x628,
  0x64A,0x62A,0x631,0x62A,0x632,0x62A,0x645,0x62A,0x646,0x62A,0x649,0x62A,
  0x64A,0x62B,0x631,0x62B,0x632,0x62B,0x645,0x62B,0x646,0x62B,0x649,0x62B,
  0x64A,0x641,0x649,0x641,0x64A,0x642,0x649,0x642,0x64A,0x643,0x627,0x643,
  0x644,0x643,0x645,0x643,0x649,0x643,0x64A,0x644,0x645,0x644,0x649,0x644,
  0x64A,0x645,0x627,0x645,0x645,0x646,0x631,0x646,0x632,0x646,0x645,0x646,
  0x646,0x646,0x649,0x646,0x64A,0x649,0x670,0x64A,0x631,0x64A,0x632,0x64A,
  0x645,0x64A,0x646,0x64A,0x649,0x64A,0x64A,0x626,0x62C,0x626,0x62D,0x626,
  0x62E,0x626,0x645,0x626,0x647,0x628,0x62C,0x628,0x62D,0x628,0x62E,0x628,
  0x645,0x628,0x647,0x62A,0x62C,0x62A,0x62D,0x62A,0x62E,0x62A,0x645,0x62A,
  0x647,0x62B,0x645,0x62C,0x62D,0x62C,0x645,0x62D,0x62C,0x62D,0x645,0x62E,
  0x62C,0x62E,0x645,0x633,0x62C,0x633,0x62D,0x633,0x62E,0x633,0x645,0x635,
  0x62D,0x635,0x62E,0x635,0x645,0x636,0x62C,0x636,0x62D,0x636,0x62E,0x636,
  0x645,0x637,0x62D,0x638,0x645,0x639,0x62C,0x639,0x645,0x63A,0x62C,0x63A,
  0x645,0x641,0x62C,0x641,0x62D,0x641,0x62E,0x641,0x645,0x642,0x62D,0x642,
  0x645,0x643,0x62C,0x643,0x62D,0x643,0x62E,0x643,0x644,0x643,0x645,0x644,
  0x62C,0x644,0x62D,0x644,0x62E,0x644,0x645,0x644,0x647,0x645,0x62C,0x645,
  0x62D,0x645,0x62E,0x645,0x645,0x646,0x62C,0x646,0x62D,0x646,0x62E,0x646,
  0x645,0x646,0x647,0x647,0x62C,0x647,0x645,0x647,0x670,0x64A,0x62C,0x64A,
  0x62D,0x64A,0x62E,0x64A,0x645,0x64A,0x647,0x626,0x645,0x626,0x647,0x628,
  0x645,0x628,0x647,0x62A,0x645,0x62A,0x647,0x62B,0x645,0x62B,0x647,0x633,
  0x645,0x633,0x647,0x634,0x645,0x634,0x647,0x643,0x644,0x643,0x645,0x644,
  0x645,0x646,0x645,0x646,0x647,0x64A,0x645,0x64A,0x647,0x640,0x64E,0x651,
  0x640,0x64F,0x651,0x640,0x650,0x651,0x637,0x649,0x637,0x64A,0x639,0x649,
  0x639,0x64A,0x63A,0x649,0x63A,0x64A,0x633,0x649,0x633,0x64A,0x634,0x649,
  0x634,0x64A,0x62D,0x649,0x62D,0x64A,0x62C,0x649,0x62C,0x64A,0x62E,0x649,
  0x62E,0x64A,0x635,0x649,0x635,0x64A,0x636,0x649,0x636,0x64A,0x634,0x62C,
  0x634,0x62D,0x634,0x62E,0x634,0x645,0x634,0x631,0x633,0x631,0x635,0x631,
  0x636,0x631,0x637,0x649,0x637,0x64A,0x639,0x649,0x639,0x64A,0x63A,0x649,
  0x63A,0x64A,0x633,0x649,0x633,0x64A,0x634,0x649,0x634,0x64A,0x62D,0x649,
  0x62D,0x64A,0x62C,0x649,0x62C,0x64A,0x62E,0x649,0x62E,0x64A,0x635,0x649,
  0x635,0x64A,0x636,0x649,0x636,0x64A,0x634,0x62C,0x634,0x62D,0x634,0x62E,
  0x634,0x645,0x634,0x631,0x633,0x631,0x635,0x631,0x636,0x631,0x634,0x62C,
  0x634,0x62D,0x634,0x62E,0x634,0x645,0x633,0x647,0x634,0x647,0x637,0x645,
  0x633,0x62C,0x633,0x62D,0x633,0x62E,0x634,0x62C,0x634,0x62D,0x634,0x62E,
  0x637,0x645,0x638,0x645,0x627,0x64B,0x627,0x64B,0x62A,0x62C,0x645,0x62A,
  0x62D,0x62C,0x62A,0x62D,0x62C,0x62A,0x62D,0x645,0x62A,0x62E,0x645,0x62A,
  0x645,0x62C,0x62A,0x645,0x62D,0x62A,0x645,0x62E,0x62C,0x645,0x62D,0x62C,
  0x645,0x62D,0x62D,0x645,0x64A,0x62D,0x645,0x649,0x633,0x62D,0x62C,0x633,
  0x62C,0x62D,0x633,0x62C,0x649,0x633,0x645,0x62D,0x633,0x645,0x62D,0x633,
  0x645,0x62C,0x633,0x645,0x645,0x633,0x645,0x645,0x635,0x62D,0x62D,0x635,
  0x62D,0x62D,0x635,0x645,0x645,0x634,0x62D,0x645,0x634,0x62D,0x645,0x634,
  0x62C,0x64A,0x634,0x645,0x62E,0x634,0x645,0x62E,0x634,0x645,0x645,0x634,
  0x645,0x645,0x636,0x62D,0x649,0x636,0x62E,0x645,0x636,0x62E,0x645,0x637,
  0x645,0x62D,0x637,0x645,0x62D,0x637,0x645,0x645,0x637,0x645,0x64A,0x639,
  0x62C,0x645,0x639,0x645,0x645,0x639,0x645,0x645,0x639,0x645,0x649,0x63A,
  0x645,0x645,0x63A,0x645,0x64A,0x63A,0x645,0x649,0x641,0x62E,0x645,0x641,
  0x62E,0x645,0x642,0x645,0x62D,0x642,0x645,0x645,0x644,0x62D,0x645,0x644,
  0x62D,0x64A,0x644,0x62D,0x649,0x644,0x62C,0x62C,0x644,0x62C,0x62C,0x644,
  0x62E,0x645,0x644,0x62E,0x645,0x644,0x645,0x62D,0x644,0x645,0x62D,0x645,
  0x62D,0x62C,0x645,0x62D,0x645,0x645,0x62D,0x64A,0x645,0x62C,0x62D,0x645,
  0x62C,0x645,0x645,0x62E,0x62C,0x645,0x62E,0x645,0x645,0x62C,0x62E,0x647,
  0x645,0x62C,0x647,0x645,0x645,0x646,0x62D,0x645,0x646,0x62D,0x649,0x646,
  0x62C,0x645,0x646,0x62C,0x645,0x646,0x62C,0x649,0x646,0x645,0x64A,0x646,
  0x645,0x649,0x64A,0x645,0x645,0x64A,0x645,0x645,0x628,0x62E,0x64A,0x62A,
  0x62C,0x64A,0x62A,0x62C,0x649,0x62A,0x62E,0x64A,0x62A,0x62E,0x649,0x62A,
  0x645,0x64A,0x62A,0x645,0x649,0x62C,0x645,0x64A,0x62C,0x62D,0x649,0x62C,
  0x645,0x649,0x633,0x62E,0x649,0x635,0x62D,0x64A,0x634,0x62D,0x64A,0x636,
  0x62D,0x64A,0x644,0x62C,0x64A,0x644,0x645,0x64A,0x64A,0x62D,0x64A,0x64A,
  0x62C,0x64A,0x64A,0x645,0x64A,0x645,0x645,0x64A,0x642,0x645,0x64A,0x646,
  0x62D,0x64A,0x642,0x645,0x62D,0x644,0x62D,0x645,0x639,0x645,0x64A,0x643,
  0x645,0x64A,0x646,0x62C,0x62D,0x645,0x62E,0x64A,0x644,0x62C,0x645,0x643,
  0x645,0x645,0x644,0x62C,0x645,0x646,0x62C,0x62D,0x62C,0x62D,0x64A,0x62D,
  0x62C,0x64A,0x645,0x62C,0x64A,0x641,0x645,0x64A,0x628,0x62D,0x64A,0x643,
  0x645,0x645,0x639,0x62C,0x645,0x635,0x645,0x645,0x633,0x62E,0x64A,0x646,
  0x62C,0x64A,0x635,0x644,0x6D2,0x642,0x644,0x6D2,0x627,0x644,0x644,0x647,
  0x627,0x643,0x628,0x631,0x645,0x62D,0x645,0x62F,0x635,0x644,0x639,0x645,
  0x631,0x633,0x648,0x644,0x639,0x644,0x64A,0x647,0x648,0x633,0x644,0x645,
  0x635,0x644,0x649,0x635,0x644,0x649,0x20,0x627,0x644,0x644,0x647,0x20,
  0x639,0x644,0x64A,0x647,0x20,0x648,0x633,0x644,0x645,0x62C,0x644,0x20,
  0x62C,0x644,0x627,0x644,0x647,0x631,0x6CC,0x627,0x644,0x2C,0x3001,0x3002,
  0x3A,0x3B,0x21,0x3F,0x3016,0x3017,0x2E,0x2E,0x2E,0x2E,0x2E,0x2014,
  0x2013,0x5F,0x5F,0x28,0x29,0x7B,0x7D,0x3014,0x3015,0x3010,0x3011,0x300A,
  0x300B,0x3008,0x3009,0x300C,0x300D,0x300E,0x300F,0x5B,0x5D,0x20,0x305,0x20,
  0x305,0x20,0x305,0x20,0x305,0x5F,0x5F,0x5F,0x2C,0x3001,0x2E,0x3B,
  0x3A,0x3F,0x21,0x2014,0x28,0x29,0x7B,0x7D,0x3014,0x3015,0x23,0x26,
  0x2A,0x2B,0x2D,0x3C,0x3E,0x3D,0x5C,0x24,0x25,0x40,0x20,0x64B,
  0x640,0x64B,0x20,0x64C,0x20,0x64D,0x20,0x64E,0x640,0x64E,0x20,0x64F,
  0x640,0x64F,0x20,0x650,0x640,0x650,0x20,0x651,0x640,0x651,0x20,0x652,
  0x640,0x652,0x621,0x622,0x622,0x623,0x623,0x624,0x624,0x625,0x625,0x626,
  0x626,0x626,0x626,0x627,0x627,0x628,0x628,0x628,0x628,0x629,0x629,0x62A,
  0x62A,0x62A,0x62A,0x62B,0x62B,0x62B,0x62B,0x62C,0x62C,0x62C,0x62C,0x62D,
  0x62D,0x62D,0x62D,0x62E,0x62E,0x62E,0x62E,0x62F,0x62F,0x630,0x630,0x631,
  0x631,0x632,0x632,0x633,0x633,0x633,0x633,0x634,0x634,0x634,0x634,0x635,
  0x635,0x635,0x635,0x636,0x636,0x636,0x636,0x637,0x637,0x637,0x637,0x638,
  0x638,0x638,0x638,0x639,0x639,0x639,0x639,0x63A,0x63A,0x63A,0x63A,0x641,
  0x641,0x641,0x641,0x642,0x642,0x642,0x642,0x643,0x643,0x643,0x643,0x644,
  0x644,0x644,0x644,0x645,0x645,0x645,0x645,0x646,0x646,0x646,0x646,0x647,
  0x647,0x647,0x647,0x648,0x648,0x649,0x649,0x64A,0x64A,0x64A,0x64A,0x644,
  0x622,0x644,0x622,0x644,0x623,0x644,0x623,0x644,0x625,0x644,0x625,0x644,
  0x627,0x644,0x627,0x21,0x22,0x23,0x24,0x25,0x26,0x27,0x28,0x29,
  0x2A,0x2B,0x2C,0x2D,0x2E,0x2F,0x30,0x31,0x32,0x33,0x34,0x35,
  0x36,0x37,0x38,0x39,0x3A,0x3B,0x3C,0x3D,0x3E,0x3F,0x40,0x41,
  0x42,0x43,0x44,0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,
  0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,0x59,
  0x5A,0x5B,0x5C,0x5D,0x5E,0x5F,0x60,0x61,0x62,0x63,0x64,0x65,
  0x66,0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,
  0x72,0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x7B,0x7C,0x7D,
  0x7E,0x2985,0x2986,0x3002,0x300C,0x300D,0x3001,0x30FB,0x30F2,0x30A1,0x30A3,0x30A5,
  0x30A7,0x30A9,0x30E3,0x30E5,0x30E7,0x30C3,0x30FC,0x30A2,0x30A4,0x30A6,0x30A8,0x30AA,
  0x30AB,0x30AD,0x30AF,0x30B1,0x30B3,0x30B5,0x30B7,0x30B9,0x30BB,0x30BD,0x30BF,0x30C1,
  0x30C4,0x30C6,0x30C8,0x30CA,0x30CB,0x30CC,0x30CD,0x30CE,0x30CF,0x30D2,0x30D5,0x30D8,
  0x30DB,0x30DE,0x30DF,0x30E0,0x30E1,0x30E2,0x30E4,0x30E6,0x30E8,0x30E9,0x30EA,0x30EB,
  0x30EC,0x30ED,0x30EF,0x30F3,0x3099,0x309A,0x1160,0x1100,0x1101,0x11AA,0x1102,0x11AC,
  0x11AD,0x1103,0x1104,0x1105,0x11B0,0x11B1,0x11B2,0x11B3,0x11B4,0x11B5,0x111A,0x1106,
  0x1107,0x1108,0x1121,0x1109,0x110A,0x110B,0x110C,0x110D,0x110E,0x110F,0x1110,0x1111,
  0x1112,0x1161,0x1162,0x1163,0x1164,0x1165,0x1166,0x1167,0x1168,0x1169,0x116A,0x116B,
  0x116C,0x116D,0x116E,0x116F,0x1170,0x1171,0x1172,0x1173,0x1174,0x1175,0xA2,0xA3,
  0xAC,0x20,0x304,0xA6,0xA5,0x20A9,0x2502,0x2190,0x2191,0x2192,0x2193,0x25A0,
  0x25CB,0x1D157,0x1D165,0x1D158,0x1D165,0x1D158,0x1D165,0x1D16E,0x1D158,0x1D165,0x1D16F,0x1D158,
  0x1D165,0x1D170,0x1D158,0x1D165,0x1D171,0x1D158,0x1D165,0x1D172,0x1D1B9,0x1D165,0x1D1BA,0x1D165,
  0x1D1B9,0x1D165,0x1D16E,0x1D1BA,0x1D165,0x1D16E,0x1D1B9,0x1D165,0x1D16F,0x1D1BA,0x1D165,0x1D16F,
  0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,
  0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,
  0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,
  0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,
  0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,
  0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,
  0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,
  0x67,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,0x73,
  0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,0x45,
  0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,0x51,
  0x52,0x53,0x54,0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,0x63,
  0x64,0x65,0x66,0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,
  0x70,0x71,0x72,0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x41,
  0x43,0x44,0x47,0x4A,0x4B,0x4E,0x4F,0x50,0x51,0x53,0x54,0x55,
  0x56,0x57,0x58,0x59,0x5A,0x61,0x62,0x63,0x64,0x66,0x68,0x69,
  0x6A,0x6B,0x6C,0x6D,0x6E,0x70,0x71,0x72,0x73,0x74,0x75,0x76,
  0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,
  0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,
  0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,
  0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,
  0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x41,0x42,0x44,0x45,
  0x46,0x47,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,0x51,0x53,0x54,
  0x55,0x56,0x57,0x58,0x59,0x61,0x62,0x63,0x64,0x65,0x66,0x67,
  0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,0x73,
  0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x41,0x42,0x44,0x45,0x46,
  0x47,0x49,0x4A,0x4B,0x4C,0x4D,0x4F,0x53,0x54,0x55,0x56,0x57,
  0x58,0x59,0x61,0x62,0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,
  0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,
  0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,
  0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,
  0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,
  0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,
  0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,
  0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,
  0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,
  0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,
  0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,
  0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,
  0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,
  0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,
  0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,
  0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,
  0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,
  0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,
  0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,
  0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,0x41,0x42,0x43,0x44,
  0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,0x4E,0x4F,0x50,
  0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,0x59,0x5A,0x61,0x62,
  0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,0x6B,0x6C,0x6D,0x6E,
  0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,0x77,0x78,0x79,0x7A,
  0x41,0x42,0x43,0x44,0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,
  0x4D,0x4E,0x4F,0x50,0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,
  0x59,0x5A,0x61,0x62,0x63,0x64,0x65,0x66,0x67,0x68,0x69,0x6A,
  0x6B,0x6C,0x6D,0x6E,0x6F,0x70,0x71,0x72,0x73,0x74,0x75,0x76,
  0x77,0x78,0x79,0x7A,0x131,0x237,0x391,0x392,0x393,0x394,0x395,0x396,
  0x397,0x398,0x399,0x39A,0x39B,0x39C,0x39D,0x39E,0x39F,0x3A0,0x3A1,0x398,
  0x3A3,0x3A4,0x3A5,0x3A6,0x3A7,0x3A8,0x3A9,0x2207,0x3B1,0x3B2,0x3B3,0x3B4,
  0x3B5,0x3B6,0x3B7,0x3B8,0x3B9,0x3BA,0x3BB,0x3BC,0x3BD,0x3BE,0x3BF,0x3C0,
  0x3C1,0x3C2,0x3C3,0x3C4,0x3C5,0x3C6,0x3C7,0x3C8,0x3C9,0x2202,0x3B5,0x3B8,
  0x3BA,0x3C6,0x3C1,0x3C0,0x391,0x392,0x393,0x394,0x395,0x396,0x397,0x398,
  0x399,0x39A,0x39B,0x39C,0x39D,0x39E,0x39F,0x3A0,0x3A1,0x398,0x3A3,0x3A4,
  0x3A5,0x3A6,0x3A7,0x3A8,0x3A9,0x2207,0x3B1,0x3B2,0x3B3,0x3B4,0x3B5,0x3B6,
  0x3B7,0x3B8,0x3B9,0x3BA,0x3BB,0x3BC,0x3BD,0x3BE,0x3BF,0x3C0,0x3C1,0x3C2,
  0x3C3,0x3C4,0x3C5,0x3C6,0x3C7,0x3C8,0x3C9,0x2202,0x3B5,0x3B8,0x3BA,0x3C6,
  0x3C1,0x3C0,0x391,0x392,0x393,0x394,0x395,0x396,0x397,0x398,0x399,0x39A,
  0x39B,0x39C,0x39D,0x39E,0x39F,0x3A0,0x3A1,0x398,0x3A3,0x3A4,0x3A5,0x3A6,
  0x3A7,0x3A8,0x3A9,0x2207,0x3B1,0x3B2,0x3B3,0x3B4,0x3B5,0x3B6,0x3B7,0x3B8,
  0x3B9,0x3BA,0x3BB,0x3BC,0x3BD,0x3BE,0x3BF,0x3C0,0x3C1,0x3C2,0x3C3,0x3C4,
  0x3C5,0x3C6,0x3C7,0x3C8,0x3C9,0x2202,0x3B5,0x3B8,0x3BA,0x3C6,0x3C1,0x3C0,
  0x391,0x392,0x393,0x394,0x395,0x396,0x397,0x398,0x399,0x39A,0x39B,0x39C,
  0x39D,0x39E,0x39F,0x3A0,0x3A1,0x398,0x3A3,0x3A4,0x3A5,0x3A6,0x3A7,0x3A8,
  0x3A9,0x2207,0x3B1,0x3B2,0x3B3,0x3B4,0x3B5,0x3B6,0x3B7,0x3B8,0x3B9,0x3BA,
  0x3BB,0x3BC,0x3BD,0x3BE,0x3BF,0x3C0,0x3C1,0x3C2,0x3C3,0x3C4,0x3C5,0x3C6,
  0x3C7,0x3C8,0x3C9,0x2202,0x3B5,0x3B8,0x3BA,0x3C6,0x3C1,0x3C0,0x391,0x392,
  0x393,0x394,0x395,0x396,0x397,0x398,0x399,0x39A,0x39B,0x39C,0x39D,0x39E,
  0x39F,0x3A0,0x3A1,0x398,0x3A3,0x3A4,0x3A5,0x3A6,0x3A7,0x3A8,0x3A9,0x2207,
  0x3B1,0x3B2,0x3B3,0x3B4,0x3B5,0x3B6,0x3B7,0x3B8,0x3B9,0x3BA,0x3BB,0x3BC,
  0x3BD,0x3BE,0x3BF,0x3C0,0x3C1,0x3C2,0x3C3,0x3C4,0x3C5,0x3C6,0x3C7,0x3C8,
  0x3C9,0x2202,0x3B5,0x3B8,0x3BA,0x3C6,0x3C1,0x3C0,0x3DC,0x3DD,0x30,0x31,
  0x32,0x33,0x34,0x35,0x36,0x37,0x38,0x39,0x30,0x31,0x32,0x33,
  0x34,0x35,0x36,0x37,0x38,0x39,0x30,0x31,0x32,0x33,0x34,0x35,
  0x36,0x37,0x38,0x39,0x30,0x31,0x32,0x33,0x34,0x35,0x36,0x37,
  0x38,0x39,0x30,0x31,0x32,0x33,0x34,0x35,0x36,0x37,0x38,0x39,
  0x627,0x628,0x62C,0x62F,0x648,0x632,0x62D,0x637,0x64A,0x643,0x644,0x645,
  0x646,0x633,0x639,0x641,0x635,0x642,0x631,0x634,0x62A,0x62B,0x62E,0x630,
  0x636,0x638,0x63A,0x66E,0x6BA,0x6A1,0x66F,0x628,0x62C,0x647,0x62D,0x64A,
  0x643,0x644,0x645,0x646,0x633,0x639,0x641,0x635,0x642,0x634,0x62A,0x62B,
  0x62E,0x636,0x63A,0x62C,0x62D,0x64A,0x644,0x646,0x633,0x639,0x635,0x642,
  0x634,0x62E,0x636,0x63A,0x6BA,0x66F,0x628,0x62C,0x647,0x62D,0x637,0x64A,
  0x643,0x645,0x646,0x633,0x639,0x641,0x635,0x642,0x634,0x62A,0x62B,0x62E,
  0x636,0x638,0x63A,0x66E,0x6A1,0x627,0x628,0x62C,0x62F,0x647,0x648,0x632,
  0x62D,0x637,0x64A,0x644,0x645,0x646,0x633,0x639,0x641,0x635,0x642,0x631,
  0x634,0x62A,0x62B,0x62E,0x630,0x636,0x638,0x63A,0x628,0x62C,0x62F,0x648,
  0x632,0x62D,0x637,0x64A,0x644,0x645,0x646,0x633,0x639,0x641,0x635,0x642,
  0x631,0x634,0x62A,0x62B,0x62E,0x630,0x636,0x638,0x63A,0x30,0x2E,0x30,
  0x2C,0x31,0x2C,0x32,0x2C,0x33,0x2C,0x34,0x2C,0x35,0x2C,0x36,
  0x2C,0x37,0x2C,0x38,0x2C,0x39,0x2C,0x28,0x41,0x29,0x28,0x42,
  0x29,0x28,0x43,0x29,0x28,0x44,0x29,0x28,0x45,0x29,0x28,0x46,
  0x29,0x28,0x47,0x29,0x28,0x48,0x29,0x28,0x49,0x29,0x28,0x4A,
  0x29,0x28,0x4B,0x29,0x28,0x4C,0x29,0x28,0x4D,0x29,0x28,0x4E,
  0x29,0x28,0x4F,0x29,0x28,0x50,0x29,0x28,0x51,0x29,0x28,0x52,
  0x29,0x28,0x53,0x29,0x28,0x54,0x29,0x28,0x55,0x29,0x28,0x56,
  0x29,0x28,0x57,0x29,0x28,0x58,0x29,0x28,0x59,0x29,0x28,0x5A,
  0x29,0x3014,0x53,0x3015,0x43,0x52,0x43,0x44,0x57,0x5A,0x41,0x42,
  0x43,0x44,0x45,0x46,0x47,0x48,0x49,0x4A,0x4B,0x4C,0x4D,0x4E,
  0x4F,0x50,0x51,0x52,0x53,0x54,0x55,0x56,0x57,0x58,0x59,0x5A,
  0x48,0x56,0x4D,0x56,0x53,0x44,0x53,0x53,0x50,0x50,0x56,0x57,
  0x43,0x4D,0x43,0x4D,0x44,0x4D,0x52,0x44,0x4A,0x307B,0x304B,0x30B3,
  0x30B3,0x30B5,0x624B,0x5B57,0x53CC,0x30C7,0x4E8C,0x591A,0x89E3,0x5929,0x4EA4,0x6620,
  0x7121,0x6599,0x524D,0x5F8C,0x518D,0x65B0,0x521D,0x7D42,0x751F,0x8CA9,0x58F0,0x5439,
  0x6F14,0x6295,0x6355,0x4E00,0x4E09,0x904A,0x5DE6,0x4E2D,0x53F3,0x6307,0x8D70,0x6253,
  0x7981,0x7A7A,0x5408,0x6E80,0x6709,0x6708,0x7533,0x5272,0x55B6,0x914D,0x3014,0x672C,
  0x3015,0x3014,0x4E09,0x3015,0x3014,0x4E8C,0x3015,0x3014,0x5B89,0x3015,0x3014,0x70B9,
  0x3015,0x3014,0x6253,0x3015,0x3014,0x76D7,0x3015,0x3014,0x52DD,0x3015,0x3014,0x6557,
  0x3015,0x5F97,0x53EF,0x30,0x31,0x32,0x33,0x34,0x35,0x36,0x37,0x38,
  0x39,0x4E3D,0x4E38,0x4E41,0x20122,0x4F60,0x4FAE,0x4FBB,0x5002,0x507A,0x5099,0x50E7,
  0x50CF,0x349E,0x2063A,0x514D,0x5154,0x5164,0x5177,0x2051C,0x34B9,0x5167,0x518D,0x2054B,
  0x5197,0x51A4,0x4ECC,0x51AC,0x51B5,0x291DF,0x51F5,0x5203,0x34DF,0x523B,0x5246,0x5272,
  0x5277,0x3515,0x52C7,0x52C9,0x52E4,0x52FA,0x5305,0x5306,0x5317,0x5349,0x5351,0x535A,
  0x5373,0x537D,0x537F,0x537F,0x537F,0x20A2C,0x7070,0x53CA,0x53DF,0x20B63,0x53EB,0x53F1,
  0x5406,0x549E,0x5438,0x5448,0x5468,0x54A2,0x54F6,0x5510,0x5553,0x5563,0x5584,0x5584,
  0x5599,0x55AB,0x55B3,0x55C2,0x5716,0x5606,0x5717,0x5651,0x5674,0x5207,0x58EE,0x57CE,
  0x57F4,0x580D,0x578B,0x5832,0x5831,0x58AC,0x214E4,0x58F2,0x58F7,0x5906,0x591A,0x5922,
  0x5962,0x216A8,0x216EA,0x59EC,0x5A1B,0x5A27,0x59D8,0x5A66,0x36EE,0x36FC,0x5B08,0x5B3E,
  0x5B3E,0x219C8,0x5BC3,0x5BD8,0x5BE7,0x5BF3,0x21B18,0x5BFF,0x5C06,0x5F53,0x5C22,0x3781,
  0x5C60,0x5C6E,0x5CC0,0x5C8D,0x21DE4,0x5D43,0x21DE6,0x5D6E,0x5D6B,0x5D7C,0x5DE1,0x5DE2,
  0x382F,0x5DFD,0x5E28,0x5E3D,0x5E69,0x3862,0x22183,0x387C,0x5EB0,0x5EB3,0x5EB6,0x5ECA,
  0x2A392,0x5EFE,0x22331,0x22331,0x8201,0x5F22,0x5F22,0x38C7,0x232B8,0x261DA,0x5F62,0x5F6B,
  0x38E3,0x5F9A,0x5FCD,0x5FD7,0x5FF9,0x6081,0x393A,0x391C,0x6094,0x226D4,0x60C7,0x6148,
  0x614C,0x614E,0x614C,0x617A,0x618E,0x61B2,0x61A4,0x61AF,0x61DE,0x61F2,0x61F6,0x6210,
  0x621B,0x625D,0x62B1,0x62D4,0x6350,0x22B0C,0x633D,0x62FC,0x6368,0x6383,0x63E4,0x22BF1,
  0x6422,0x63C5,0x63A9,0x3A2E,0x6469,0x647E,0x649D,0x6477,0x3A6C,0x654F,0x656C,0x2300A,
  0x65E3,0x66F8,0x6649,0x3B19,0x6691,0x3B08,0x3AE4,0x5192,0x5195,0x6700,0x669C,0x80AD,
  0x43D9,0x6717,0x671B,0x6721,0x675E,0x6753,0x233C3,0x3B49,0x67FA,0x6785,0x6852,0x6885,
  0x2346D,0x688E,0x681F,0x6914,0x3B9D,0x6942,0x69A3,0x69EA,0x6AA8,0x236A3,0x6ADB,0x3C18,
  0x6B21,0x238A7,0x6B54,0x3C4E,0x6B72,0x6B9F,0x6BBA,0x6BBB,0x23A8D,0x21D0B,0x23AFA,0x6C4E,
  0x23CBC,0x6CBF,0x6CCD,0x6C67,0x6D16,0x6D3E,0x6D77,0x6D41,0x6D69,0x6D78,0x6D85,0x23D1E,
  0x6D34,0x6E2F,0x6E6E,0x3D33,0x6ECB,0x6EC7,0x23ED1,0x6DF9,0x6F6E,0x23F5E,0x23F8E,0x6FC6,
  0x7039,0x701E,0x701B,0x3D96,0x704A,0x707D,0x7077,0x70AD,0x20525,0x7145,0x24263,0x719C,
  0x243AB,0x7228,0x7235,0x7250,0x24608,0x7280,0x7295,0x24735,0x24814,0x737A,0x738B,0x3EAC,
  0x73A5,0x3EB8,0x3EB8,0x7447,0x745C,0x7471,0x7485,0x74CA,0x3F1B,0x7524,0x24C36,0x753E,
  0x24C92,0x7570,0x2219F,0x7610,0x24FA1,0x24FB8,0x25044,0x3FFC,0x4008,0x76F4,0x250F3,0x250F2,
  0x25119,0x25133,0x771E,0x771F,0x771F,0x774A,0x4039,0x778B,0x4046,0x4096,0x2541D,0x784E,
  0x788C,0x78CC,0x40E3,0x25626,0x7956,0x2569A,0x256C5,0x798F,0x79EB,0x412F,0x7A40,0x7A4A,
  0x7A4F,0x2597C,0x25AA7,0x25AA7,0x7AEE,0x4202,0x25BAB,0x7BC6,0x7BC9,0x4227,0x25C80,0x7CD2,
  0x42A0,0x7CE8,0x7CE3,0x7D00,0x25F86,0x7D63,0x4301,0x7DC7,0x7E02,0x7E45,0x4334,0x26228,
  0x26247,0x4359,0x262D9,0x7F7A,0x2633E,0x7F95,0x7FFA,0x8005,0x264DA,0x26523,0x8060,0x265A8,
  0x8070,0x2335F,0x43D5,0x80B2,0x8103,0x440B,0x813E,0x5AB5,0x267A7,0x267B5,0x23393,0x2339C,
  0x8201,0x8204,0x8F9E,0x446B,0x8291,0x828B,0x829D,0x52B3,0x82B1,0x82B3,0x82BD,0x82E6,
  0x26B3C,0x82E5,0x831D,0x8363,0x83AD,0x8323,0x83BD,0x83E7,0x8457,0x8353,0x83CA,0x83CC,
  0x83DC,0x26C36,0x26D6B,0x26CD5,0x452B,0x84F1,0x84F3,0x8516,0x273CA,0x8564,0x26F2C,0x455D,
  0x4561,0x26FB1,0x270D2,0x456B,0x8650,0x865C,0x8667,0x8669,0x86A9,0x8688,0x870E,0x86E2,
  0x8779,0x8728,0x876B,0x8786,0x45D7,0x87E1,0x8801,0x45F9,0x8860,0x8863,0x27667,0x88D7,
  0x88DE,0x4635,0x88FA,0x34BB,0x278AE,0x27966,0x46BE,0x46C7,0x8AA0,0x8AED,0x8B8A,0x8C55,
  0x27CA8,0x8CAB,0x8CC1,0x8D1B,0x8D77,0x27F2F,0x20804,0x8DCB,0x8DBC,0x8DF0,0x208DE,0x8ED4,
  0x8F38,0x285D2,0x285ED,0x9094,0x90F1,0x9111,0x2872E,0x911B,0x9238,0x92D7,0x92D8,0x927C,
  0x93F9,0x9415,0x28BFA,0x958B,0x4995,0x95B7,0x28D77,0x49E6,0x96C3,0x5DB2,0x9723,0x29145,
  0x2921A,0x4A6E,0x4A76,0x97E0,0x2940A,0x4AB2,0x29496,0x980B,0x980B,0x9829,0x295B6,0x98E2,
  0x4B33,0x9929,0x99A7,0x99C2,0x99FE,0x4BCE,0x29B30,0x9B12,0x9C40,0x9CFD,0x4CCE,0x4CED,
  0x9D67,0x2A0CE,0x4CF8,0x2A105,0x2A20E,0x2A291,0x9EBB,0x4D56,0x9EF9,0x9EFE,0x9F05,0x9F0F,
  0x9F16,0x9F3B,0x2A600,
};

const CategoryRange kCategoryRanges[] = {
  {0x21,0x23,4},
  {0x25,0x2A,4},
  {0x2C,0x2F,4},
  {0x30,0x39,3},
  {0x3A,0x3B,4},
  {0x3F,0x40,4},
  {0x41,0x5A,1},
  {0x5B,0x5D,4},
  {0x5F,0x5F,4},
  {0x61,0x7A,2},
  {0x7B,0x7B,4},
  {0x7D,0x7D,4},
  {0xA1,0xA1,4},
  {0xA7,0xA7,4},
  {0xAB,0xAB,4},
  {0xB5,0xB5,2},
  {0xB6,0xB7,4},
  {0xBB,0xBB,4},
  {0xBF,0xBF,4},
  {0xC0,0xD6,1},
  {0xD8,0xDE,1},
  {0xDF,0xF6,2},
  {0xF8,0xFF,2},
  {0x100,0x100,1},
  {0x101,0x101,2},
  {0x102,0x102,1},
  {0x103,0x103,2},
  {0x104,0x104,1},
  {0x105,0x105,2},
  {0x106,0x106,1},
  {0x107,0x107,2},
  {0x108,0x108,1},
  {0x109,0x109,2},
  {0x10A,0x10A,1},
  {0x10B,0x10B,2},
  {0x10C,0x10C,1},
  {0x10D,0x10D,2},
  {0x10E,0x10E,1},
  {0x10F,0x10F,2},
  {0x110,0x110,1},
  {0x111,0x111,2},
  {0x112,0x112,1},
  {0x113,0x113,2},
  {0x114,0x114,1},
  {0x115,0x115,2},
  {0x116,0x116,1},
  {0x117,0x117,2},
  {0x118,0x118,1},
  {0x119,0x119,2},
  {0x11A,0x11A,1},
  {0x11B,0x11B,2},
  {0x11C,0x11C,1},
  {0x11D,0x11D,2},
  {0x11E,0x11E,1},
  {0x11F,0x11F,2},
  {0x120,0x120,1},
  {0x121,0x121,2},
  {0x122,0x122,1},
  {0x123,0x123,2},
  {0x124,0x124,1},
  {0x125,0x125,2},
  {0x126,0x126,1},
  {0x127,0x127,2},
  {0x128,0x128,1},
  {0x129,0x129,2},
  {0x12A,0x12A,1},
  {0x12B,0x12B,2},
  {0x12C,0x12C,1},
  {0x12D,0x12D,2},
  {0x12E,0x12E,1},
  {0x12F,0x12F,2},
  {0x130,0x130,1},
  {0x131,0x131,2},
  {0x132,0x132,1},
  {0x133,0x133,2},
  {0x134,0x134,1},
  {0x135,0x135,2},
  {0x136,0x136,1},
  {0x137,0x138,2},
  {0x139,0x139,1},
  {0x13A,0x13A,2},
  {0x13B,0x13B,1},
  {0x13C,0x13C,2},
  {0x13D,0x13D,1},
  {0x13E,0x13E,2},
  {0x13F,0x13F,1},
  {0x140,0x140,2},
  {0x141,0x141,1},
  {0x142,0x142,2},
  {0x143,0x143,1},
  {0x144,0x144,2},
  {0x145,0x145,1},
  {0x146,0x146,2},
  {0x147,0x147,1},
  {0x148,0x149,2},
  {0x14A,0x14A,1},
  {0x14B,0x14B,2},
  {0x14C,0x14C,1},
  {0x14D,0x14D,2},
  {0x14E,0x14E,1},
  {0x14F,0x14F,2},
  {0x150,0x150,1},
  {0x151,0x151,2},
  {0x152,0x152,1},
  {0x153,0x153,2},
  {0x154,0x154,1},
  {0x155,0x155,2},
  {0x156,0x156,1},
  {0x157,0x157,2},
  {0x158,0x158,1},
  {0x159,0x159,2},
  {0x15A,0x15A,1},
  {0x15B,0x15B,2},
  {0x15C,0x15C,1},
  {0x15D,0x15D,2},
  {0x15E,0x15E,1},
  {0x15F,0x15F,2},
  {0x160,0x160,1},
  {0x161,0x161,2},
  {0x162,0x162,1},
  {0x163,0x163,2},
  {0x164,0x164,1},
  {0x165,0x165,2},
  {0x166,0x166,1},
  {0x167,0x167,2},
  {0x168,0x168,1},
  {0x169,0x169,2},
  {0x16A,0x16A,1},
  {0x16B,0x16B,2},
  {0x16C,0x16C,1},
  {0x16D,0x16D,2},
  {0x16E,0x16E,1},
  {0x16F,0x16F,2},
  {0x170,0x170,1},
  {0x171,0x171,2},
  {0x172,0x172,1},
  {0x173,0x173,2},
  {0x174,0x174,1},
  {0x175,0x175,2},
  {0x176,0x176,1},
  {0x177,0x177,2},
  {0x178,0x179,1},
  {0x17A,0x17A,2},
  {0x17B,0x17B,1},
  {0x17C,0x17C,2},
  {0x17D,0x17D,1},
  {0x17E,0x180,2},
  {0x181,0x182,1},
  {0x183,0x183,2},
  {0x184,0x184,1},
  {0x185,0x185,2},
  {0x186,0x187,1},
  {0x188,0x188,2},
  {0x189,0x18B,1},
  {0x18C,0x18D,2},
  {0x18E,0x191,1},
  {0x192,0x192,2},
  {0x193,0x194,1},
  {0x195,0x195,2},
  {0x196,0x198,1},
  {0x199,0x19B,2},
  {0x19C,0x19D,1},
  {0x19E,0x19E,2},
  {0x19F,0x1A0,1},
  {0x1A1,0x1A1,2},
  {0x1A2,0x1A2,1},
  {0x1A3,0x1A3,2},
  {0x1A4,0x1A4,1},
  {0x1A5,0x1A5,2},
  {0x1A6,0x1A7,1},
  {0x1A8,0x1A8,2},
  {0x1A9,0x1A9,1},
  {0x1AA,0x1AB,2},
  {0x1AC,0x1AC,1},
  {0x1AD,0x1AD,2},
  {0x1AE,0x1AF,1},
  {0x1B0,0x1B0,2},
  {0x1B1,0x1B3,1},
  {0x1B4,0x1B4,2},
  {0x1B5,0x1B5,1},
  {0x1B6,0x1B6,2},
  {0x1B7,0x1B8,1},
  {0x1B9,0x1BA,2},
  {0x1BC,0x1BC,1},
  {0x1BD,0x1BF,2},
  {0x1C4,0x1C4,1},
  {0x1C6,0x1C6,2},
  {0x1C7,0x1C7,1},
  {0x1C9,0x1C9,2},
  {0x1CA,0x1CA,1},
  {0x1CC,0x1CC,2},
  {0x1CD,0x1CD,1},
  {0x1CE,0x1CE,2},
  {0x1CF,0x1CF,1},
  {0x1D0,0x1D0,2},
  {0x1D1,0x1D1,1},
  {0x1D2,0x1D2,2},
  {0x1D3,0x1D3,1},
  {0x1D4,0x1D4,2},
  {0x1D5,0x1D5,1},
  {0x1D6,0x1D6,2},
  {0x1D7,0x1D7,1},
  {0x1D8,0x1D8,2},
  {0x1D9,0x1D9,1},
  {0x1DA,0x1DA,2},
  {0x1DB,0x1DB,1},
  {0x1DC,0x1DD,2},
  {0x1DE,0x1DE,1},
  {0x1DF,0x1DF,2},
  {0x1E0,0x1E0,1},
  {0x1E1,0x1E1,2},
  {0x1E2,0x1E2,1},
  {0x1E3,0x1E3,2},
  {0x1E4,0x1E4,1},
  {0x1E5,0x1E5,2},
  {0x1E6,0x1E6,1},
  {0x1E7,0x1E7,2},
  {0x1E8,0x1E8,1},
  {0x1E9,0x1E9,2},
  {0x1EA,0x1EA,1},
  {0x1EB,0x1EB,2},
  {0x1EC,0x1EC,1},
  {0x1ED,0x1ED,2},
  {0x1EE,0x1EE,1},
  {0x1EF,0x1F0,2},
  {0x1F1,0x1F1,1},
  {0x1F3,0x1F3,2},
  {0x1F4,0x1F4,1},
  {0x1F5,0x1F5,2},
  {0x1F6,0x1F8,1},
  {0x1F9,0x1F9,2},
  {0x1FA,0x1FA,1},
  {0x1FB,0x1FB,2},
  {0x1FC,0x1FC,1},
  {0x1FD,0x1FD,2},
  {0x1FE,0x1FE,1},
  {0x1FF,0x1FF,2},
  {0x200,0x200,1},
  {0x201,0x201,2},
  {0x202,0x202,1},
  {0x203,0x203,2},
  {0x204,0x204,1},
  {0x205,0x205,2},
  {0x206,0x206,1},
  {0x207,0x207,2},
  {0x208,0x208,1},
  {0x209,0x209,2},
  {0x20A,0x20A,1},
  {0x20B,0x20B,2},
  {0x20C,0x20C,1},
  {0x20D,0x20D,2},
  {0x20E,0x20E,1},
  {0x20F,0x20F,2},
  {0x210,0x210,1},
  {0x211,0x211,2},
  {0x212,0x212,1},
  {0x213,0x213,2},
  {0x214,0x214,1},
  {0x215,0x215,2},
  {0x216,0x216,1},
  {0x217,0x217,2},
  {0x218,0x218,1},
  {0x219,0x219,2},
  {0x21A,0x21A,1},
  {0x21B,0x21B,2},
  {0x21C,0x21C,1},
  {0x21D,0x21D,2},
  {0x21E,0x21E,1},
  {0x21F,0x21F,2},
  {0x220,0x220,1},
  {0x221,0x221,2},
  {0x222,0x222,1},
  {0x223,0x223,2},
  {0x224,0x224,1},
  {0x225,0x225,2},
  {0x226,0x226,1},
  {0x227,0x227,2},
  {0x228,0x228,1},
  {0x229,0x229,2},
  {0x22A,0x22A,1},
  {0x22B,0x22B,2},
  {0x22C,0x22C,1},
  {0x22D,0x22D,2},
  {0x22E,0x22E,1},
  {0x22F,0x22F,2},
  {0x230,0x230,1},
  {0x231,0x231,2},
  {0x232,0x232,1},
  {0x233,0x239,2},
  {0x23A,0x23B,1},
  {0x23C,0x23C,2},
  {0x23D,0x23E,1},
  {0x23F,0x240,2},
  {0x241,0x241,1},
  {0x242,0x242,2},
  {0x243,0x246,1},
  {0x247,0x247,2},
  {0x248,0x248,1},
  {0x249,0x249,2},
  {0x24A,0x24A,1},
  {0x24B,0x24B,2},
  {0x24C,0x24C,1},
  {0x24D,0x24D,2},
  {0x24E,0x24E,1},
  {0x24F,0x293,2},
  {0x295,0x2AF,2},
  {0x370,0x370,1},
  {0x371,0x371,2},
  {0x372,0x372,1},
  {0x373,0x373,2},
  {0x376,0x376,1},
  {0x377,0x377,2},
  {0x37B,0x37D,2},
  {0x37E,0x37E,4},
  {0x37F,0x37F,1},
  {0x386,0x386,1},
  {0x387,0x387,4},
  {0x388,0x38A,1},
  {0x38C,0x38C,1},
  {0x38E,0x38F,1},
  {0x390,0x390,2},
  {0x391,0x3A1,1},
  {0x3A3,0x3AB,1},
  {0x3AC,0x3CE,2},
  {0x3CF,0x3CF,1},
  {0x3D0,0x3D1,2},
  {0x3D2,0x3D4,1},
  {0x3D5,0x3D7,2},
  {0x3D8,0x3D8,1},
  {0x3D9,0x3D9,2},
  {0x3DA,0x3DA,1},
  {0x3DB,0x3DB,2},
  {0x3DC,0x3DC,1},
  {0x3DD,0x3DD,2},
  {0x3DE,0x3DE,1},
  {0x3DF,0x3DF,2},
  {0x3E0,0x3E0,1},
  {0x3E1,0x3E1,2},
  {0x3E2,0x3E2,1},
  {0x3E3,0x3E3,2},
  {0x3E4,0x3E4,1},
  {0x3E5,0x3E5,2},
  {0x3E6,0x3E6,1},
  {0x3E7,0x3E7,2},
  {0x3E8,0x3E8,1},
  {0x3E9,0x3E9,2},
  {0x3EA,0x3EA,1},
  {0x3EB,0x3EB,2},
  {0x3EC,0x3EC,1},
  {0x3ED,0x3ED,2},
  {0x3EE,0x3EE,1},
  {0x3EF,0x3F3,2},
  {0x3F4,0x3F4,1},
  {0x3F5,0x3F5,2},
  {0x3F7,0x3F7,1},
  {0x3F8,0x3F8,2},
  {0x3F9,0x3FA,1},
  {0x3FB,0x3FC,2},
  {0x3FD,0x42F,1},
  {0x430,0x45F,2},
  {0x460,0x460,1},
  {0x461,0x461,2},
  {0x462,0x462,1},
  {0x463,0x463,2},
  {0x464,0x464,1},
  {0x465,0x465,2},
  {0x466,0x466,1},
  {0x467,0x467,2},
  {0x468,0x468,1},
  {0x469,0x469,2},
  {0x46A,0x46A,1},
  {0x46B,0x46B,2},
  {0x46C,0x46C,1},
  {0x46D,0x46D,2},
  {0x46E,0x46E,1},
  {0x46F,0x46F,2},
  {0x470,0x470,1},
  {0x471,0x471,2},
  {0x472,0x472,1},
  {0x473,0x473,2},
  {0x474,0x474,1},
  {0x475,0x475,2},
  {0x476,0x476,1},
  {0x477,0x477,2},
  {0x478,0x478,1},
  {0x479,0x479,2},
  {0x47A,0x47A,1},
  {0x47B,0x47B,2},
  {0x47C,0x47C,1},
  {0x47D,0x47D,2},
  {0x47E,0x47E,1},
  {0x47F,0x47F,2},
  {0x480,0x480,1},
  {0x481,0x481,2},
  {0x48A,0x48A,1},
  {0x48B,0x48B,2},
  {0x48C,0x48C,1},
  {0x48D,0x48D,2},
  {0x48E,0x48E,1},
  {0x48F,0x48F,2},
  {0x490,0x490,1},
  {0x491,0x491,2},
  {0x492,0x492,1},
  {0x493,0x493,2},
  {0x494,0x494,1},
  {0x495,0x495,2},
  {0x496,0x496,1},
  {0x497,0x497,2},
  {0x498,0x498,1},
  {0x499,0x499,2},
  {0x49A,0x49A,1},
  {0x49B,0x49B,2},
  {0x49C,0x49C,1},
  {0x49D,0x49D,2},
  {0x49E,0x49E,1},
  {0x49F,0x49F,2},
  {0x4A0,0x4A0,1},
  {0x4A1,0x4A1,2},
  {0x4A2,0x4A2,1},
  {0x4A3,0x4A3,2},
  {0x4A4,0x4A4,1},
  {0x4A5,0x4A5,2},
  {0x4A6,0x4A6,1},
  {0x4A7,0x4A7,2},
  {0x4A8,0x4A8,1},
  {0x4A9,0x4A9,2},
  {0x4AA,0x4AA,1},
  {0x4AB,0x4AB,2},
  {0x4AC,0x4AC,1},
  {0x4AD,0x4AD,2},
  {0x4AE,0x4AE,1},
  {0x4AF,0x4AF,2},
  {0x4B0,0x4B0,1},
  {0x4B1,0x4B1,2},
  {0x4B2,0x4B2,1},
  {0x4B3,0x4B3,2},
  {0x4B4,0x4B4,1},
  {0x4B5,0x4B5,2},
  {0x4B6,0x4B6,1},
  {0x4B7,0x4B7,2},
  {0x4B8,0x4B8,1},
  {0x4B9,0x4B9,2},
  {0x4BA,0x4BA,1},
  {0x4BB,0x4BB,2},
  {0x4BC,0x4BC,1},
  {0x4BD,0x4BD,2},
  {0x4BE,0x4BE,1},
  {0x4BF,0x4BF,2},
  {0x4C0,0x4C1,1},
  {0x4C2,0x4C2,2},
  {0x4C3,0x4C3,1},
  {0x4C4,0x4C4,2},
  {0x4C5,0x4C5,1},
  {0x4C6,0x4C6,2},
  {0x4C7,0x4C7,1},
  {0x4C8,0x4C8,2},
  {0x4C9,0x4C9,1},
  {0x4CA,0x4CA,2},
  {0x4CB,0x4CB,1},
  {0x4CC,0x4CC,2},
  {0x4CD,0x4CD,1},
  {0x4CE,0x4CF,2},
  {0x4D0,0x4D0,1},
  {0x4D1,0x4D1,2},
  {0x4D2,0x4D2,1},
  {0x4D3,0x4D3,2},
  {0x4D4,0x4D4,1},
  {0x4D5,0x4D5,2},
  {0x4D6,0x4D6,1},
  {0x4D7,0x4D7,2},
  {0x4D8,0x4D8,1},
  {0x4D9,0x4D9,2},
  {0x4DA,0x4DA,1},
  {0x4DB,0x4DB,2},
  {0x4DC,0x4DC,1},
  {0x4DD,0x4DD,2},
  {0x4DE,0x4DE,1},
  {0x4DF,0x4DF,2},
  {0x4E0,0x4E0,1},
  {0x4E1,0x4E1,2},
  {0x4E2,0x4E2,1},
  {0x4E3,0x4E3,2},
  {0x4E4,0x4E4,1},
  {0x4E5,0x4E5,2},
  {0x4E6,0x4E6,1},
  {0x4E7,0x4E7,2},
  {0x4E8,0x4E8,1},
  {0x4E9,0x4E9,2},
  {0x4EA,0x4EA,1},
  {0x4EB,0x4EB,2},
  {0x4EC,0x4EC,1},
  {0x4ED,0x4ED,2},
  {0x4EE,0x4EE,1},
  {0x4EF,0x4EF,2},
  {0x4F0,0x4F0,1},
  {0x4F1,0x4F1,2},
  {0x4F2,0x4F2,1},
  {0x4F3,0x4F3,2},
  {0x4F4,0x4F4,1},
  {0x4F5,0x4F5,2},
  {0x4F6,0x4F6,1},
  {0x4F7,0x4F7,2},
  {0x4F8,0x4F8,1},
  {0x4F9,0x4F9,2},
  {0x4FA,0x4FA,1},
  {0x4FB,0x4FB,2},
  {0x4FC,0x4FC,1},
  {0x4FD,0x4FD,2},
  {0x4FE,0x4FE,1},
  {0x4FF,0x4FF,2},
  {0x500,0x500,1},
  {0x501,0x501,2},
  {0x502,0x502,1},
  {0x503,0x503,2},
  {0x504,0x504,1},
  {0x505,0x505,2},
  {0x506,0x506,1},
  {0x507,0x507,2},
  {0x508,0x508,1},
  {0x509,0x509,2},
  {0x50A,0x50A,1},
  {0x50B,0x50B,2},
  {0x50C,0x50C,1},
  {0x50D,0x50D,2},
  {0x50E,0x50E,1},
  {0x50F,0x50F,2},
  {0x510,0x510,1},
  {0x511,0x511,2},
  {0x512,0x512,1},
  {0x513,0x513,2},
  {0x514,0x514,1},
  {0x515,0x515,2},
  {0x516,0x516,1},
  {0x517,0x517,2},
  {0x518,0x518,1},
  {0x519,0x519,2},
  {0x51A,0x51A,1},
  {0x51B,0x51B,2},
  {0x51C,0x51C,1},
  {0x51D,0x51D,2},
  {0x51E,0x51E,1},
  {0x51F,0x51F,2},
  {0x520,0x520,1},
  {0x521,0x521,2},
  {0x522,0x522,1},
  {0x523,0x523,2},
  {0x524,0x524,1},
  {0x525,0x525,2},
  {0x526,0x526,1},
  {0x527,0x527,2},
  {0x528,0x528,1},
  {0x529,0x529,2},
  {0x52A,0x52A,1},
  {0x52B,0x52B,2},
  {0x52C,0x52C,1},
  {0x52D,0x52D,2},
  {0x52E,0x52E,1},
  {0x52F,0x52F,2},
  {0x531,0x556,1},
  {0x55A,0x55F,4},
  {0x560,0x588,2},
  {0x589,0x58A,4},
  {0x5BE,0x5BE,4},
  {0x5C0,0x5C0,4},
  {0x5C3,0x5C3,4},
  {0x5C6,0x5C6,4},
  {0x5F3,0x5F4,4},
  {0x609,0x60A,4},
  {0x60C,0x60D,4},
  {0x61B,0x61B,4},
  {0x61E,0x61F,4},
  {0x660,0x669,3},
  {0x66A,0x66D,4},
  {0x6D4,0x6D4,4},
  {0x6F0,0x6F9,3},
  {0x700,0x70D,4},
  {0x7C0,0x7C9,3},
  {0x7F7,0x7F9,4},
  {0x830,0x83E,4},
  {0x85E,0x85E,4},
  {0x964,0x965,4},
  {0x966,0x96F,3},
  {0x970,0x970,4},
  {0x9E6,0x9EF,3},
  {0x9FD,0x9FD,4},
  {0xA66,0xA6F,3},
  {0xA76,0xA76,4},
  {0xAE6,0xAEF,3},
  {0xAF0,0xAF0,4},
  {0xB66,0xB6F,3},
  {0xBE6,0xBEF,3},
  {0xC66,0xC6F,3},
  {0xC77,0xC77,4},
  {0xC84,0xC84,4},
  {0xCE6,0xCEF,3},
  {0xD66,0xD6F,3},
  {0xDE6,0xDEF,3},
  {0xDF4,0xDF4,4},
  {0xE4F,0xE4F,4},
  {0xE50,0xE59,3},
  {0xE5A,0xE5B,4},
  {0xED0,0xED9,3},
  {0xF04,0xF12,4},
  {0xF14,0xF14,4},
  {0xF20,0xF29,3},
  {0xF3A,0xF3D,4},
  {0xF85,0xF85,4},
  {0xFD0,0xFD4,4},
  {0xFD9,0xFDA,4},
  {0x1040,0x1049,3},
  {0x104A,0x104F,4},
  {0x1090,0x1099,3},
  {0x10A0,0x10C5,1},
  {0x10C7,0x10C7,1},
  {0x10CD,0x10CD,1},
  {0x10D0,0x10FA,2},
  {0x10FB,0x10FB,4},
  {0x10FD,0x10FF,2},
  {0x1360,0x1368,4},
  {0x13A0,0x13F5,1},
  {0x13F8,0x13FD,2},
  {0x1400,0x1400,4},
  {0x166E,0x166E,4},
  {0x169B,0x169C,4},
  {0x16EB,0x16ED,4},
  {0x1735,0x1736,4},
  {0x17D4,0x17D6,4},
  {0x17D8,0x17DA,4},
  {0x17E0,0x17E9,3},
  {0x1800,0x180A,4},
  {0x1810,0x1819,3},
  {0x1944,0x1945,4},
  {0x1946,0x194F,3},
  {0x19D0,0x19D9,3},
  {0x1A1E,0x1A1F,4},
  {0x1A80,0x1A89,3},
  {0x1A90,0x1A99,3},
  {0x1AA0,0x1AA6,4},
  {0x1AA8,0x1AAD,4},
  {0x1B50,0x1B59,3},
  {0x1B5A,0x1B60,4},
  {0x1BB0,0x1BB9,3},
  {0x1BFC,0x1BFF,4},
  {0x1C3B,0x1C3F,4},
  {0x1C40,0x1C49,3},
  {0x1C50,0x1C59,3},
  {0x1C7E,0x1C7F,4},
  {0x1C80,0x1C88,2},
  {0x1C90,0x1CBA,1},
  {0x1CBD,0x1CBF,1},
  {0x1CC0,0x1CC7,4},
  {0x1CD3,0x1CD3,4},
  {0x1D00,0x1D2B,2},
  {0x1D6B,0x1D77,2},
  {0x1D79,0x1D9A,2},
  {0x1E00,0x1E00,1},
  {0x1E01,0x1E01,2},
  {0x1E02,0x1E02,1},
  {0x1E03,0x1E03,2},
  {0x1E04,0x1E04,1},
  {0x1E05,0x1E05,2},
  {0x1E06,0x1E06,1},
  {0x1E07,0x1E07,2},
  {0x1E08,0x1E08,1},
  {0x1E09,0x1E09,2},
  {0x1E0A,0x1E0A,1},
  {0x1E0B,0x1E0B,2},
  {0x1E0C,0x1E0C,1},
  {0x1E0D,0x1E0D,2},
  {0x1E0E,0x1E0E,1},
  {0x1E0F,0x1E0F,2},
  {0x1E10,0x1E10,1},
  {0x1E11,0x1E11,2},
  {0x1E12,0x1E12,1},
  {0x1E13,0x1E13,2},
  {0x1E14,0x1E14,1},
  {0x1E15,0x1E15,2},
  {0x1E16,0x1E16,1},
  {0x1E17,0x1E17,2},
  {0x1E18,0x1E18,1},
  {0x1E19,0x1E19,2},
  {0x1E1A,0x1E1A,1},
  {0x1E1B,0x1E1B,2},
  {0x1E1C,0x1E1C,1},
  {0x1E1D,0x1E1D,2},
  {0x1E1E,0x1E1E,1},
  {0x1E1F,0x1E1F,2},
  {0x1E20,0x1E20,1},
  {0x1E21,0x1E21,2},
  {0x1E22,0x1E22,1},
  {0x1E23,0x1E23,2},
  {0x1E24,0x1E24,1},
  {0x1E25,0x1E25,2},
  {0x1E26,0x1E26,1},
  {0x1E27,0x1E27,2},
  {0x1E28,0x1E28,1},
  {0x1E29,0x1E29,2},
  {0x1E2A,0x1E2A,1},
  {0x1E2B,0x1E2B,2},
  {0x1E2C,0x1E2C,1},
  {0x1E2D,0x1E2D,2},
  {0x1E2E,0x1E2E,1},
  {0x1E2F,0x1E2F,2},
  {0x1E30,0x1E30,1},
  {0x1E31,0x1E31,2},
  {0x1E32,0x1E32,1},
  {0x1E33,0x1E33,2},
  {0x1E34,0x1E34,1},
  {0x1E35,0x1E35,2},
  {0x1E36,0x1E36,1},
  {0x1E37,0x1E37,2},
  {0x1E38,0x1E38,1},
  {0x1E39,0x1E39,2},
  {0x1E3A,0x1E3A,1},
  {0x1E3B,0x1E3B,2},
  {0x1E3C,0x1E3C,1},
  {0x1E3D,0x1E3D,2},
  {0x1E3E,0x1E3E,1},
  {0x1E3F,0x1E3F,2},
  {0x1E40,0x1E40,1},
  {0x1E41,0x1E41,2},
  {0x1E42,0x1E42,1},
  {0x1E43,0x1E43,2},
  {0x1E44,0x1E44,1},
  {0x1E45,0x1E45,2},
  {0x1E46,0x1E46,1},
  {0x1E47,0x1E47,2},
  {0x1E48,0x1E48,1},
  {0x1E49,0x1E49,2},
  {0x1E4A,0x1E4A,1},
  {0x1E4B,0x1E4B,2},
  {0x1E4C,0x1E4C,1},
  {0x1E4D,0x1E4D,2},
  {0x1E4E,0x1E4E,1},
  {0x1E4F,0x1E4F,2},
  {0x1E50,0x1E50,1},
  {0x1E51,0x1E51,2},
  {0x1E52,0x1E52,1},
  {0x1E53,0x1E53,2},
  {0x1E54,0x1E54,1},
  {0x1E55,0x1E55,2},
  {0x1E56,0x1E56,1},
  {0x1E57,0x1E57,2},
  {0x1E58,0x1E58,1},
  {0x1E59,0x1E59,2},
  {0x1E5A,0x1E5A,1},
  {0x1E5B,0x1E5B,2},
  {0x1E5C,0x1E5C,1},
  {0x1E5D,0x1E5D,2},
  {0x1E5E,0x1E5E,1},
  {0x1E5F,0x1E5F,2},
  {0x1E60,0x1E60,1},
  {0x1E61,0x1E61,2},
  {0x1E62,0x1E62,1},
  {0x1E63,0x1E63,2},
  {0x1E64,0x1E64,1},
  {0x1E65,0x1E65,2},
  {0x1E66,0x1E66,1},
  {0x1E67,0x1E67,2},
  {0x1E68,0x1E68,1},
  {0x1E69,0x1E69,2},
  {0x1E6A,0x1E6A,1},
  {0x1E6B,0x1E6B,2},
  {0x1E6C,0x1E6C,1},
  {0x1E6D,0x1E6D,2},
  {0x1E6E,0x1E6E,1},
  {0x1E6F,0x1E6F,2},
  {0x1E70,0x1E70,1},
  {0x1E71,0x1E71,2},
  {0x1E72,0x1E72,1},
  {0x1E73,0x1E73,2},
  {0x1E74,0x1E74,1},
  {0x1E75,0x1E75,2},
  {0x1E76,0x1E76,1},
  {0x1E77,0x1E77,2},
  {0x1E78,0x1E78,1},
  {0x1E79,0x1E79,2},
  {0x1E7A,0x1E7A,1},
  {0x1E7B,0x1E7B,2},
  {0x1E7C,0x1E7C,1},
  {0x1E7D,0x1E7D,2},
  {0x1E7E,0x1E7E,1},
  {0x1E7F,0x1E7F,2},
  {0x1E80,0x1E80,1},
  {0x1E81,0x1E81,2},
  {0x1E82,0x1E82,1},
  {0x1E83,0x1E83,2},
  {0x1E84,0x1E84,1},
  {0x1E85,0x1E85,2},
  {0x1E86,0x1E86,1},
  {0x1E87,0x1E87,2},
  {0x1E88,0x1E88,1},
  {0x1E89,0x1E89,2},
  {0x1E8A,0x1E8A,1},
  {0x1E8B,0x1E8B,2},
  {0x1E8C,0x1E8C,1},
  {0x1E8D,0x1E8D,2},
  {0x1E8E,0x1E8E,1},
  {0x1E8F,0x1E8F,2},
  {0x1E90,0x1E90,1},
  {0x1E91,0x1E91,2},
  {0x1E92,0x1E92,1},
  {0x1E93,0x1E93,2},
  {0x1E94,0x1E94,1},
  {0x1E95,0x1E9D,2},
  {0x1E9E,0x1E9E,1},
  {0x1E9F,0x1E9F,2},
  {0x1EA0,0x1EA0,1},
  {0x1EA1,0x1EA1,2},
  {0x1EA2,0x1EA2,1},
  {0x1EA3,0x1EA3,2},
  {0x1EA4,0x1EA4,1},
  {0x1EA5,0x1EA5,2},
  {0x1EA6,0x1EA6,1},
  {0x1EA7,0x1EA7,2},
  {0x1EA8,0x1EA8,1},
  {0x1EA9,0x1EA9,2},
  {0x1EAA,0x1EAA,1},
  {0x1EAB,0x1EAB,2},
  {0x1EAC,0x1EAC,1},
  {0x1EAD,0x1EAD,2},
  {0x1EAE,0x1EAE,1},
  {0x1EAF,0x1EAF,2},
  {0x1EB0,0x1EB0,1},
  {0x1EB1,0x1EB1,2},
  {0x1EB2,0x1EB2,1},
  {0x1EB3,0x1EB3,2},
  {0x1EB4,0x1EB4,1},
  {0x1EB5,0x1EB5,2},
  {0x1EB6,0x1EB6,1},
  {0x1EB7,0x1EB7,2},
  {0x1EB8,0x1EB8,1},
  {0x1EB9,0x1EB9,2},
  {0x1EBA,0x1EBA,1},
  {0x1EBB,0x1EBB,2},
  {0x1EBC,0x1EBC,1},
  {0x1EBD,0x1EBD,2},
  {0x1EBE,0x1EBE,1},
  {0x1EBF,0x1EBF,2},
  {0x1EC0,0x1EC0,1},
  {0x1EC1,0x1EC1,2},
  {0x1EC2,0x1EC2,1},
  {0x1EC3,0x1EC3,2},
  {0x1EC4,0x1EC4,1},
  {0x1EC5,0x1EC5,2},
  {0x1EC6,0x1EC6,1},
  {0x1EC7,0x1EC7,2},
  {0x1EC8,0x1EC8,1},
  {0x1EC9,0x1EC9,2},
  {0x1ECA,0x1ECA,1},
  {0x1ECB,0x1ECB,2},
  {0x1ECC,0x1ECC,1},
  {0x1ECD,0x1ECD,2},
  {0x1ECE,0x1ECE,1},
  {0x1ECF,0x1ECF,2},
  {0x1ED0,0x1ED0,1},
  {0x1ED1,0x1ED1,2},
  {0x1ED2,0x1ED2,1},
  {0x1ED3,0x1ED3,2},
  {0x1ED4,0x1ED4,1},
  {0x1ED5,0x1ED5,2},
  {0x1ED6,0x1ED6,1},
  {0x1ED7,0x1ED7,2},
  {0x1ED8,0x1ED8,1},
  {0x1ED9,0x1ED9,2},
  {0x1EDA,0x1EDA,1},
  {0x1EDB,0x1EDB,2},
  {0x1EDC,0x1EDC,1},
  {0x1EDD,0x1EDD,2},
  {0x1EDE,0x1EDE,1},
  {0x1EDF,0x1EDF,2},
  {0x1EE0,0x1EE0,1},
  {0x1EE1,0x1EE1,2},
  {0x1EE2,0x1EE2,1},
  {0x1EE3,0x1EE3,2},
  {0x1EE4,0x1EE4,1},
  {0x1EE5,0x1EE5,2},
  {0x1EE6,0x1EE6,1},
  {0x1EE7,0x1EE7,2},
  {0x1EE8,0x1EE8,1},
  {0x1EE9,0x1EE9,2},
  {0x1EEA,0x1EEA,1},
  {0x1EEB,0x1EEB,2},
  {0x1EEC,0x1EEC,1},
  {0x1EED,0x1EED,2},
  {0x1EEE,0x1EEE,1},
  {0x1EEF,0x1EEF,2},
  {0x1EF0,0x1EF0,1},
  {0x1EF1,0x1EF1,2},
  {0x1EF2,0x1EF2,1},
  {0x1EF3,0x1EF3,2},
  {0x1EF4,0x1EF4,1},
  {0x1EF5,0x1EF5,2},
  {0x1EF6,0x1EF6,1},
  {0x1EF7,0x1EF7,2},
  {0x1EF8,0x1EF8,1},
  {0x1EF9,0x1EF9,2},
  {0x1EFA,0x1EFA,1},
  {0x1EFB,0x1EFB,2},
  {0x1EFC,0x1EFC,1},
  {0x1EFD,0x1EFD,2},
  {0x1EFE,0x1EFE,1},
  {0x1EFF,0x1F07,2},
  {0x1F08,0x1F0F,1},
  {0x1F10,0x1F15,2},
  {0x1F18,0x1F1D,1},
  {0x1F20,0x1F27,2},
  {0x1F28,0x1F2F,1},
  {0x1F30,0x1F37,2},
  {0x1F38,0x1F3F,1},
  {0x1F40,0x1F45,2},
  {0x1F48,0x1F4D,1},
  {0x1F50,0x1F57,2},
  {0x1F59,0x1F59,1},
  {0x1F5B,0x1F5B,1},
  {0x1F5D,0x1F5D,1},
  {0x1F5F,0x1F5F,1},
  {0x1F60,0x1F67,2},
  {0x1F68,0x1F6F,1},
  {0x1F70,0x1F7D,2},
  {0x1F80,0x1F87,2},
  {0x1F90,0x1F97,2},
  {0x1FA0,0x1FA7,2},
  {0x1FB0,0x1FB4,2},
  {0x1FB6,0x1FB7,2},
  {0x1FB8,0x1FBB,1},
  {0x1FBE,0x1FBE,2},
  {0x1FC2,0x1FC4,2},
  {0x1FC6,0x1FC7,2},
  {0x1FC8,0x1FCB,1},
  {0x1FD0,0x1FD3,2},
  {0x1FD6,0x1FD7,2},
  {0x1FD8,0x1FDB,1},
  {0x1FE0,0x1FE7,2},
  {0x1FE8,0x1FEC,1},
  {0x1FF2,0x1FF4,2},
  {0x1FF6,0x1FF7,2},
  {0x1FF8,0x1FFB,1},
  {0x2010,0x2027,4},
  {0x2030,0x2043,4},
  {0x2045,0x2051,4},
  {0x2053,0x205E,4},
  {0x207D,0x207E,4},
  {0x208D,0x208E,4},
  {0x2102,0x2102,1},
  {0x2107,0x2107,1},
  {0x210A,0x210A,2},
  {0x210B,0x210D,1},
  {0x210E,0x210F,2},
  {0x2110,0x2112,1},
  {0x2113,0x2113,2},
  {0x2115,0x2115,1},
  {0x2119,0x211D,1},
  {0x2124,0x2124,1},
  {0x2126,0x2126,1},
  {0x2128,0x2128,1},
  {0x212A,0x212D,1},
  {0x212F,0x212F,2},
  {0x2130,0x2133,1},
  {0x2134,0x2134,2},
  {0x2139,0x2139,2},
  {0x213C,0x213D,2},
  {0x213E,0x213F,1},
  {0x2145,0x2145,1},
  {0x2146,0x2149,2},
  {0x214E,0x214E,2},
  {0x2183,0x2183,1},
  {0x2184,0x2184,2},
  {0x2308,0x230B,4},
  {0x2329,0x232A,4},
  {0x2768,0x2775,4},
  {0x27C5,0x27C6,4},
  {0x27E6,0x27EF,4},
  {0x2983,0x2998,4},
  {0x29D8,0x29DB,4},
  {0x29FC,0x29FD,4},
  {0x2C00,0x2C2E,1},
  {0x2C30,0x2C5E,2},
  {0x2C60,0x2C60,1},
  {0x2C61,0x2C61,2},
  {0x2C62,0x2C64,1},
  {0x2C65,0x2C66,2},
  {0x2C67,0x2C67,1},
  {0x2C68,0x2C68,2},
  {0x2C69,0x2C69,1},
  {0x2C6A,0x2C6A,2},
  {0x2C6B,0x2C6B,1},
  {0x2C6C,0x2C6C,2},
  {0x2C6D,0x2C70,1},
  {0x2C71,0x2C71,2},
  {0x2C72,0x2C72,1},
  {0x2C73,0x2C74,2},
  {0x2C75,0x2C75,1},
  {0x2C76,0x2C7B,2},
  {0x2C7E,0x2C80,1},
  {0x2C81,0x2C81,2},
  {0x2C82,0x2C82,1},
  {0x2C83,0x2C83,2},
  {0x2C84,0x2C84,1},
  {0x2C85,0x2C85,2},
  {0x2C86,0x2C86,1},
  {0x2C87,0x2C87,2},
  {0x2C88,0x2C88,1},
  {0x2C89,0x2C89,2},
  {0x2C8A,0x2C8A,1},
  {0x2C8B,0x2C8B,2},
  {0x2C8C,0x2C8C,1},
  {0x2C8D,0x2C8D,2},
  {0x2C8E,0x2C8E,1},
  {0x2C8F,0x2C8F,2},
  {0x2C90,0x2C90,1},
  {0x2C91,0x2C91,2},
  {0x2C92,0x2C92,1},
  {0x2C93,0x2C93,2},
  {0x2C94,0x2C94,1},
  {0x2C95,0x2C95,2},
  {0x2C96,0x2C96,1},
  {0x2C97,0x2C97,2},
  {0x2C98,0x2C98,1},
  {0x2C99,0x2C99,2},
  {0x2C9A,0x2C9A,1},
  {0x2C9B,0x2C9B,2},
  {0x2C9C,0x2C9C,1},
  {0x2C9D,0x2C9D,2},
  {0x2C9E,0x2C9E,1},
  {0x2C9F,0x2C9F,2},
  {0x2CA0,0x2CA0,1},
  {0x2CA1,0x2CA1,2},
  {0x2CA2,0x2CA2,1},
  {0x2CA3,0x2CA3,2},
  {0x2CA4,0x2CA4,1},
  {0x2CA5,0x2CA5,2},
  {0x2CA6,0x2CA6,1},
  {0x2CA7,0x2CA7,2},
  {0x2CA8,0x2CA8,1},
  {0x2CA9,0x2CA9,2},
  {0x2CAA,0x2CAA,1},
  {0x2CAB,0x2CAB,2},
  {0x2CAC,0x2CAC,1},
  {0x2CAD,0x2CAD,2},
  {0x2CAE,0x2CAE,1},
  {0x2CAF,0x2CAF,2},
  {0x2CB0,0x2CB0,1},
  {0x2CB1,0x2CB1,2},
  {0x2CB2,0x2CB2,1},
  {0x2CB3,0x2CB3,2},
  {0x2CB4,0x2CB4,1},
  {0x2CB5,0x2CB5,2},
  {0x2CB6,0x2CB6,1},
  {0x2CB7,0x2CB7,2},
  {0x2CB8,0x2CB8,1},
  {0x2CB9,0x2CB9,2},
  {0x2CBA,0x2CBA,1},
  {0x2CBB,0x2CBB,2},
  {0x2CBC,0x2CBC,1},
  {0x2CBD,0x2CBD,2},
  {0x2CBE,0x2CBE,1},
  {0x2CBF,0x2CBF,2},
  {0x2CC0,0x2CC0,1},
  {0x2CC1,0x2CC1,2},
  {0x2CC2,0x2CC2,1},
  {0x2CC3,0x2CC3,2},
  {0x2CC4,0x2CC4,1},
  {0x2CC5,0x2CC5,2},
  {0x2CC6,0x2CC6,1},
  {0x2CC7,0x2CC7,2},
  {0x2CC8,0x2CC8,1},
  {0x2CC9,0x2CC9,2},
  {0x2CCA,0x2CCA,1},
  {0x2CCB,0x2CCB,2},
  {0x2CCC,0x2CCC,1},
  {0x2CCD,0x2CCD,2},
  {0x2CCE,0x2CCE,1},
  {0x2CCF,0x2CCF,2},
  {0x2CD0,0x2CD0,1},
  {0x2CD1,0x2CD1,2},
  {0x2CD2,0x2CD2,1},
  {0x2CD3,0x2CD3,2},
  {0x2CD4,0x2CD4,1},
  {0x2CD5,0x2CD5,2},
  {0x2CD6,0x2CD6,1},
  {0x2CD7,0x2CD7,2},
  {0x2CD8,0x2CD8,1},
  {0x2CD9,0x2CD9,2},
  {0x2CDA,0x2CDA,1},
  {0x2CDB,0x2CDB,2},
  {0x2CDC,0x2CDC,1},
  {0x2CDD,0x2CDD,2},
  {0x2CDE,0x2CDE,1},
  {0x2CDF,0x2CDF,2},
  {0x2CE0,0x2CE0,1},
  {0x2CE1,0x2CE1,2},
  {0x2CE2,0x2CE2,1},
  {0x2CE3,0x2CE4,2},
  {0x2CEB,0x2CEB,1},
  {0x2CEC,0x2CEC,2},
  {0x2CED,0x2CED,1},
  {0x2CEE,0x2CEE,2},
  {0x2CF2,0x2CF2,1},
  {0x2CF3,0x2CF3,2},
  {0x2CF9,0x2CFC,4},
  {0x2CFE,0x2CFF,4},
  {0x2D00,0x2D25,2},
  {0x2D27,0x2D27,2},
  {0x2D2D,0x2D2D,2},
  {0x2D70,0x2D70,4},
  {0x2E00,0x2E2E,4},
  {0x2E30,0x2E4F,4},
  {0x2E52,0x2E52,4},
  {0x3001,0x3003,4},
  {0x3008,0x3011,4},
  {0x3014,0x301F,4},
  {0x3030,0x3030,4},
  {0x303D,0x303D,4},
  {0x30A0,0x30A0,4},
  {0x30FB,0x30FB,4},
  {0xA4FE,0xA4FF,4},
  {0xA60D,0xA60F,4},
  {0xA620,0xA629,3},
  {0xA640,0xA640,1},
  {0xA641,0xA641,2},
  {0xA642,0xA642,1},
  {0xA643,0xA643,2},
  {0xA644,0xA644,1},
  {0xA645,0xA645,2},
  {0xA646,0xA646,1},
  {0xA647,0xA647,2},
  {0xA648,0xA648,1},
  {0xA649,0xA649,2},
  {0xA64A,0xA64A,1},
  {0xA64B,0xA64B,2},
  {0xA64C,0xA64C,1},
  {0xA64D,0xA64D,2},
  {0xA64E,0xA64E,1},
  {0xA64F,0xA64F,2},
  {0xA650,0xA650,1},
  {0xA651,0xA651,2},
  {0xA652,0xA652,1},
  {0xA653,0xA653,2},
  {0xA654,0xA654,1},
  {0xA655,0xA655,2},
  {0xA656,0xA656,1},
  {0xA657,0xA657,2},
  {0xA658,0xA658,1},
  {0xA659,0xA659,2},
  {0xA65A,0xA65A,1},
  {0xA65B,0xA65B,2},
  {0xA65C,0xA65C,1},
  {0xA65D,0xA65D,2},
  {0xA65E,0xA65E,1},
  {0xA65F,0xA65F,2},
  {0xA660,0xA660,1},
  {0xA661,0xA661,2},
  {0xA662,0xA662,1},
  {0xA663,0xA663,2},
  {0xA664,0xA664,1},
  {0xA665,0xA665,2},
  {0xA666,0xA666,1},
  {0xA667,0xA667,2},
  {0xA668,0xA668,1},
  {0xA669,0xA669,2},
  {0xA66A,0xA66A,1},
  {0xA66B,0xA66B,2},
  {0xA66C,0xA66C,1},
  {0xA66D,0xA66D,2},
  {0xA673,0xA673,4},
  {0xA67E,0xA67E,4},
  {0xA680,0xA680,1},
  {0xA681,0xA681,2},
  {0xA682,0xA682,1},
  {0xA683,0xA683,2},
  {0xA684,0xA684,1},
  {0xA685,0xA685,2},
  {0xA686,0xA686,1},
  {0xA687,0xA687,2},
  {0xA688,0xA688,1},
  {0xA689,0xA689,2},
  {0xA68A,0xA68A,1},
  {0xA68B,0xA68B,2},
  {0xA68C,0xA68C,1},
  {0xA68D,0xA68D,2},
  {0xA68E,0xA68E,1},
  {0xA68F,0xA68F,2},
  {0xA690,0xA690,1},
  {0xA691,0xA691,2},
  {0xA692,0xA692,1},
  {0xA693,0xA693,2},
  {0xA694,0xA694,1},
  {0xA695,0xA695,2},
  {0xA696,0xA696,1},
  {0xA697,0xA697,2},
  {0xA698,0xA698,1},
  {0xA699,0xA699,2},
  {0xA69A,0xA69A,1},
  {0xA69B,0xA69B,2},
  {0xA6F2,0xA6F7,4},
  {0xA722,0xA722,1},
  {0xA723,0xA723,2},
  {0xA724,0xA724,1},
  {0xA725,0xA725,2},
  {0xA726,0xA726,1},
  {0xA727,0xA727,2},
  {0xA728,0xA728,1},
  {0xA729,0xA729,2},
  {0xA72A,0xA72A,1},
  {0xA72B,0xA72B,2},
  {0xA72C,0xA72C,1},
  {0xA72D,0xA72D,2},
  {0xA72E,0xA72E,1},
  {0xA72F,0xA731,2},
  {0xA732,0xA732,1},
  {0xA733,0xA733,2},
  {0xA734,0xA734,1},
  {0xA735,0xA735,2},
  {0xA736,0xA736,1},
  {0xA737,0xA737,2},
  {0xA738,0xA738,1},
  {0xA739,0xA739,2},
  {0xA73A,0xA73A,1},
  {0xA73B,0xA73B,2},
  {0xA73C,0xA73C,1},
  {0xA73D,0xA73D,2},
  {0xA73E,0xA73E,1},
  {0xA73F,0xA73F,2},
  {0xA740,0xA740,1},
  {0xA741,0xA741,2},
  {0xA742,0xA742,1},
  {0xA743,0xA743,2},
  {0xA744,0xA744,1},
  {0xA745,0xA745,2},
  {0xA746,0xA746,1},
  {0xA747,0xA747,2},
  {0xA748,0xA748,1},
  {0xA749,0xA749,2},
  {0xA74A,0xA74A,1},
  {0xA74B,0xA74B,2},
  {0xA74C,0xA74C,1},
  {0xA74D,0xA74D,2},
  {0xA74E,0xA74E,1},
  {0xA74F,0xA74F,2},
  {0xA750,0xA750,1},
  {0xA751,0xA751,2},
  {0xA752,0xA752,1},
  {0xA753,0xA753,2},
  {0xA754,0xA754,1},
  {0xA755,0xA755,2},
  {0xA756,0xA756,1},
  {0xA757,0xA757,2},
  {0xA758,0xA758,1},
  {0xA759,0xA759,2},
  {0xA75A,0xA75A,1},
  {0xA75B,0xA75B,2},
  {0xA75C,0xA75C,1},
  {0xA75D,0xA75D,2},
  {0xA75E,0xA75E,1},
  {0xA75F,0xA75F,2},
  {0xA760,0xA760,1},
  {0xA761,0xA761,2},
  {0xA762,0xA762,1},
  {0xA763,0xA763,2},
  {0xA764,0xA764,1},
  {0xA765,0xA765,2},
  {0xA766,0xA766,1},
  {0xA767,0xA767,2},
  {0xA768,0xA768,1},
  {0xA769,0xA769,2},
  {0xA76A,0xA76A,1},
  {0xA76B,0xA76B,2},
  {0xA76C,0xA76C,1},
  {0xA76D,0xA76D,2},
  {0xA76E,0xA76E,1},
  {0xA76F,0xA76F,2},
  {0xA771,0xA778,2},
  {0xA779,0xA779,1},
  {0xA77A,0xA77A,2},
  {0xA77B,0xA77B,1},
  {0xA77C,0xA77C,2},
  {0xA77D,0xA77E,1},
  {0xA77F,0xA77F,2},
  {0xA780,0xA780,1},
  {0xA781,0xA781,2},
  {0xA782,0xA782,1},
  {0xA783,0xA783,2},
  {0xA784,0xA784,1},
  {0xA785,0xA785,2},
  {0xA786,0xA786,1},
  {0xA787,0xA787,2},
  {0xA78B,0xA78B,1},
  {0xA78C,0xA78C,2},
  {0xA78D,0xA78D,1},
  {0xA78E,0xA78E,2},
  {0xA790,0xA790,1},
  {0xA791,0xA791,2},
  {0xA792,0xA792,1},
  {0xA793,0xA795,2},
  {0xA796,0xA796,1},
  {0xA797,0xA797,2},
  {0xA798,0xA798,1},
  {0xA799,0xA799,2},
  {0xA79A,0xA79A,1},
  {0xA79B,0xA79B,2},
  {0xA79C,0xA79C,1},
  {0xA79D,0xA79D,2},
  {0xA79E,0xA79E,1},
  {0xA79F,0xA79F,2},
  {0xA7A0,0xA7A0,1},
  {0xA7A1,0xA7A1,2},
  {0xA7A2,0xA7A2,1},
  {0xA7A3,0xA7A3,2},
  {0xA7A4,0xA7A4,1},
  {0xA7A5,0xA7A5,2},
  {0xA7A6,0xA7A6,1},
  {0xA7A7,0xA7A7,2},
  {0xA7A8,0xA7A8,1},
  {0xA7A9,0xA7A9,2},
  {0xA7AA,0xA7AE,1},
  {0xA7AF,0xA7AF,2},
  {0xA7B0,0xA7B4,1},
  {0xA7B5,0xA7B5,2},
  {0xA7B6,0xA7B6,1},
  {0xA7B7,0xA7B7,2},
  {0xA7B8,0xA7B8,1},
  {0xA7B9,0xA7B9,2},
  {0xA7BA,0xA7BA,1},
  {0xA7BB,0xA7BB,2},
  {0xA7BC,0xA7BC,1},
  {0xA7BD,0xA7BD,2},
  {0xA7BE,0xA7BE,1},
  {0xA7BF,0xA7BF,2},
  {0xA7C2,0xA7C2,1},
  {0xA7C3,0xA7C3,2},
  {0xA7C4,0xA7C7,1},
  {0xA7C8,0xA7C8,2},
  {0xA7C9,0xA7C9,1},
  {0xA7CA,0xA7CA,2},
  {0xA7F5,0xA7F5,1},
  {0xA7F6,0xA7F6,2},
  {0xA7FA,0xA7FA,2},
  {0xA874,0xA877,4},
  {0xA8CE,0xA8CF,4},
  {0xA8D0,0xA8D9,3},
  {0xA8F8,0xA8FA,4},
  {0xA8FC,0xA8FC,4},
  {0xA900,0xA909,3},
  {0xA92E,0xA92F,4},
  {0xA95F,0xA95F,4},
  {0xA9C1,0xA9CD,4},
  {0xA9D0,0xA9D9,3},
  {0xA9DE,0xA9DF,4},
  {0xA9F0,0xA9F9,3},
  {0xAA50,0xAA59,3},
  {0xAA5C,0xAA5F,4},
  {0xAADE,0xAADF,4},
  {0xAAF0,0xAAF1,4},
  {0xAB30,0xAB5A,2},
  {0xAB60,0xAB68,2},
  {0xAB70,0xABBF,2},
  {0xABEB,0xABEB,4},
  {0xABF0,0xABF9,3},
  {0xFB00,0xFB06,2},
  {0xFB13,0xFB17,2},
  {0xFD3E,0xFD3F,4},
  {0xFE10,0xFE19,4},
  {0xFE30,0xFE52,4},
  {0xFE54,0xFE61,4},
  {0xFE63,0xFE63,4},
  {0xFE68,0xFE68,4},
  {0xFE6A,0xFE6B,4},
  {0xFF01,0xFF03,4},
  {0xFF05,0xFF0A,4},
  {0xFF0C,0xFF0F,4},
  {0xFF10,0xFF19,3},
  {0xFF1A,0xFF1B,4},
  {0xFF1F,0xFF20,4},
  {0xFF21,0xFF3A,1},
  {0xFF3B,0xFF3D,4},
  {0xFF3F,0xFF3F,4},
  {0xFF41,0xFF5A,2},
  {0xFF5B,0xFF5B,4},
  {0xFF5D,0xFF5D,4},
  {0xFF5F,0xFF65,4},
  {0x10100,0x10102,4},
  {0x1039F,0x1039F,4},
  {0x103D0,0x103D0,4},
  {0x10400,0x10427,1},
  {0x10428,0x1044F,2},
  {0x104A0,0x104A9,3},
  {0x104B0,0x104D3,1},
  {0x104D8,0x104FB,2},
  {0x1056F,0x1056F,4},
  {0x10857,0x10857,4},
  {0x1091F,0x1091F,4},
  {0x1093F,0x1093F,4},
  {0x10A50,0x10A58,4},
  {0x10A7F,0x10A7F,4},
  {0x10AF0,0x10AF6,4},
  {0x10B39,0x10B3F,4},
  {0x10B99,0x10B9C,4},
  {0x10C80,0x10CB2,1},
  {0x10CC0,0x10CF2,2},
  {0x10D30,0x10D39,3},
  {0x10EAD,0x10EAD,4},
  {0x10F55,0x10F59,4},
  {0x11047,0x1104D,4},
  {0x11066,0x1106F,3},
  {0x110BB,0x110BC,4},
  {0x110BE,0x110C1,4},
  {0x110F0,0x110F9,3},
  {0x11136,0x1113F,3},
  {0x11140,0x11143,4},
  {0x11174,0x11175,4},
  {0x111C5,0x111C8,4},
  {0x111CD,0x111CD,4},
  {0x111D0,0x111D9,3},
  {0x111DB,0x111DB,4},
  {0x111DD,0x111DF,4},
  {0x11238,0x1123D,4},
  {0x112A9,0x112A9,4},
  {0x112F0,0x112F9,3},
  {0x1144B,0x1144F,4},
  {0x11450,0x11459,3},
  {0x1145A,0x1145B,4},
  {0x1145D,0x1145D,4},
  {0x114C6,0x114C6,4},
  {0x114D0,0x114D9,3},
  {0x115C1,0x115D7,4},
  {0x11641,0x11643,4},
  {0x11650,0x11659,3},
  {0x11660,0x1166C,4},
  {0x116C0,0x116C9,3},
  {0x11730,0x11739,3},
  {0x1173C,0x1173E,4},
  {0x1183B,0x1183B,4},
  {0x118A0,0x118BF,1},
  {0x118C0,0x118DF,2},
  {0x118E0,0x118E9,3},
  {0x11944,0x11946,4},
  {0x11950,0x11959,3},
  {0x119E2,0x119E2,4},
  {0x11A3F,0x11A46,4},
  {0x11A9A,0x11A9C,4},
  {0x11A9E,0x11AA2,4},
  {0x11C41,0x11C45,4},
  {0x11C50,0x11C59,3},
  {0x11C70,0x11C71,4},
  {0x11D50,0x11D59,3},
  {0x11DA0,0x11DA9,3},
  {0x11EF7,0x11EF8,4},
  {0x11FFF,0x11FFF,4},
  {0x12470,0x12474,4},
  {0x16A60,0x16A69,3},
  {0x16A6E,0x16A6F,4},
  {0x16AF5,0x16AF5,4},
  {0x16B37,0x16B3B,4},
  {0x16B44,0x16B44,4},
  {0x16B50,0x16B59,3},
  {0x16E40,0x16E5F,1},
  {0x16E60,0x16E7F,2},
  {0x16E97,0x16E9A,4},
  {0x16FE2,0x16FE2,4},
  {0x1BC9F,0x1BC9F,4},
  {0x1D400,0x1D419,1},
  {0x1D41A,0x1D433,2},
  {0x1D434,0x1D44D,1},
  {0x1D44E,0x1D454,2},
  {0x1D456,0x1D467,2},
  {0x1D468,0x1D481,1},
  {0x1D482,0x1D49B,2},
  {0x1D49C,0x1D49C,1},
  {0x1D49E,0x1D49F,1},
  {0x1D4A2,0x1D4A2,1},
  {0x1D4A5,0x1D4A6,1},
  {0x1D4A9,0x1D4AC,1},
  {0x1D4AE,0x1D4B5,1},
  {0x1D4B6,0x1D4B9,2},
  {0x1D4BB,0x1D4BB,2},
  {0x1D4BD,0x1D4C3,2},
  {0x1D4C5,0x1D4CF,2},
  {0x1D4D0,0x1D4E9,1},
  {0x1D4EA,0x1D503,2},
  {0x1D504,0x1D505,1},
  {0x1D507,0x1D50A,1},
  {0x1D50D,0x1D514,1},
  {0x1D516,0x1D51C,1},
  {0x1D51E,0x1D537,2},
  {0x1D538,0x1D539,1},
  {0x1D53B,0x1D53E,1},
  {0x1D540,0x1D544,1},
  {0x1D546,0x1D546,1},
  {0x1D54A,0x1D550,1},
  {0x1D552,0x1D56B,2},
  {0x1D56C,0x1D585,1},
  {0x1D586,0x1D59F,2},
  {0x1D5A0,0x1D5B9,1},
  {0x1D5BA,0x1D5D3,2},
  {0x1D5D4,0x1D5ED,1},
  {0x1D5EE,0x1D607,2},
  {0x1D608,0x1D621,1},
  {0x1D622,0x1D63B,2},
  {0x1D63C,0x1D655,1},
  {0x1D656,0x1D66F,2},
  {0x1D670,0x1D689,1},
  {0x1D68A,0x1D6A5,2},
  {0x1D6A8,0x1D6C0,1},
  {0x1D6C2,0x1D6DA,2},
  {0x1D6DC,0x1D6E1,2},
  {0x1D6E2,0x1D6FA,1},
  {0x1D6FC,0x1D714,2},
  {0x1D716,0x1D71B,2},
  {0x1D71C,0x1D734,1},
  {0x1D736,0x1D74E,2},
  {0x1D750,0x1D755,2},
  {0x1D756,0x1D76E,1},
  {0x1D770,0x1D788,2},
  {0x1D78A,0x1D78F,2},
  {0x1D790,0x1D7A8,1},
  {0x1D7AA,0x1D7C2,2},
  {0x1D7C4,0x1D7C9,2},
  {0x1D7CA,0x1D7CA,1},
  {0x1D7CB,0x1D7CB,2},
  {0x1D7CE,0x1D7FF,3},
  {0x1DA87,0x1DA8B,4},
  {0x1E140,0x1E149,3},
  {0x1E2F0,0x1E2F9,3},
  {0x1E900,0x1E921,1},
  {0x1E922,0x1E943,2},
  {0x1E950,0x1E959,3},
  {0x1E95E,0x1E95F,4},
  {0x1FBF0,0x1FBF9,3},
};
const std::size_t kCategoryRangeCount = 1529;

const LowerEntry kLowerEntries[] = {
  {0x41,0x61},
  {0x42,0x62},
  {0x43,0x63},
  {0x44,0x64},
  {0x45,0x65},
  {0x46,0x66},
  {0x47,0x67},
  {0x48,0x68},
  {0x49,0x69},
  {0x4A,0x6A},
  {0x4B,0x6B},
  {0x4C,0x6C},
  {0x4D,0x6D},
  {0x4E,0x6E},
  {0x4F,0x6F},
  {0x50,0x70},
  {0x51,0x71},
  {0x52,0x72},
  {0x53,0x73},
  {0x54,0x74},
  {0x55,0x75},
  {0x56,0x76},
  {0x57,0x77},
  {0x58,0x78},
  {0x59,0x79},
  {0x5A,0x7A},
  {0xC0,0xE0},
  {0xC1,0xE1},
  {0xC2,0xE2},
  {0xC3,0xE3},
  {0xC4,0xE4},
  {0xC5,0xE5},
  {0xC6,0xE6},
  {0xC7,0xE7},
  {0xC8,0xE8},
  {0xC9,0xE9},
  {0xCA,0xEA},
  {0xCB,0xEB},
  {0xCC,0xEC},
  {0xCD,0xED},
  {0xCE,0xEE},
  {0xCF,0xEF},
  {0xD0,0xF0},
  {0xD1,0xF1},
  {0xD2,0xF2},
  {0xD3,0xF3},
  {0xD4,0xF4},
  {0xD5,0xF5},
  {0xD6,0xF6},
  {0xD8,0xF8},
  {0xD9,0xF9},
  {0xDA,0xFA},
  {0xDB,0xFB},
  {0xDC,0xFC},
  {0xDD,0xFD},
  {0xDE,0xFE},
  {0x100,0x101},
  {0x102,0x103},
  {0x104,0x105},
  {0x106,0x107},
  {0x108,0x109},
  {0x10A,0x10B},
  {0x10C,0x10D},
  {0x10E,0x10F},
  {0x110,0x111},
  {0x112,0x113},
  {0x114,0x115},
  {0x116,0x117},
  {0x118,0x119},
  {0x11A,0x11B},
  {0x11C,0x11D},
  {0x11E,0x11F},
  {0x120,0x121},
  {0x122,0x123},
  {0x124,0x125},
  {0x126,0x127},
  {0x128,0x129},
  {0x12A,0x12B},
  {0x12C,0x12D},
  {0x12E,0x12F},
  {0x132,0x133},
  {0x134,0x135},
  {0x136,0x137},
  {0x139,0x13A},
  {0x13B,0x13C},
  {0x13D,0x13E},
  {0x13F,0x140},
  {0x141,0x142},
  {0x143,0x144},
  {0x145,0x146},
  {0x147,0x148},
  {0x14A,0x14B},
  {0x14C,0x14D},
  {0x14E,0x14F},
  {0x150,0x151},
  {0x152,0x153},
  {0x154,0x155},
  {0x156,0x157},
  {0x158,0x159},
  {0x15A,0x15B},
  {0x15C,0x15D},
  {0x15E,0x15F},
  {0x160,0x161},
  {0x162,0x163},
  {0x164,0x165},
  {0x166,0x167},
  {0x168,0x169},
  {0x16A,0x16B},
  {0x16C,0x16D},
  {0x16E,0x16F},
  {0x170,0x171},
  {0x172,0x173},
  {0x174,0x175},
  {0x176,0x177},
  {0x178,0xFF},
  {0x179,0x17A},
  {0x17B,0x17C},
  {0x17D,0x17E},
  {0x181,0x253},
  {0x182,0x183},
  {0x184,0x185},
  {0x186,0x254},
  {0x187,0x188},
  {0x189,0x256},
  {0x18A,0x257},
  {0x18B,0x18C},
  {0x18E,0x1DD},
  {0x18F,0x259},
  {0x190,0x25B},
  {0x191,0x192},
  {0x193,0x260},
  {0x194,0x263},
  {0x196,0x269},
  {0x197,0x268},
  {0x198,0x199},
  {0x19C,0x26F},
  {0x19D,0x272},
  {0x19F,0x275},
  {0x1A0,0x1A1},
  {0x1A2,0x1A3},
  {0x1A4,0x1A5},
  {0x1A6,0x280},
  {0x1A7,0x1A8},
  {0x1A9,0x283},
  {0x1AC,0x1AD},
  {0x1AE,0x288},
  {0x1AF,0x1B0},
  {0x1B1,0x28A},
  {0x1B2,0x28B},
  {0x1B3,0x1B4},
  {0x1B5,0x1B6},
  {0x1B7,0x292},
  {0x1B8,0x1B9},
  {0x1BC,0x1BD},
  {0x1C4,0x1C6},
  {0x1C5,0x1C6},
  {0x1C7,0x1C9},
  {0x1C8,0x1C9},
  {0x1CA,0x1CC},
  {0x1CB,0x1CC},
  {0x1CD,0x1CE},
  {0x1CF,0x1D0},
  {0x1D1,0x1D2},
  {0x1D3,0x1D4},
  {0x1D5,0x1D6},
  {0x1D7,0x1D8},
  {0x1D9,0x1DA},
  {0x1DB,0x1DC},
  {0x1DE,0x1DF},
  {0x1E0,0x1E1},
  {0x1E2,0x1E3},
  {0x1E4,0x1E5},
  {0x1E6,0x1E7},
  {0x1E8,0x1E9},
  {0x1EA,0x1EB},
  {0x1EC,0x1ED},
  {0x1EE,0x1EF},
  {0x1F1,0x1F3},
  {0x1F2,0x1F3},
  {0x1F4,0x1F5},
  {0x1F6,0x195},
  {0x1F7,0x1BF},
  {0x1F8,0x1F9},
  {0x1FA,0x1FB},
  {0x1FC,0x1FD},
  {0x1FE,0x1FF},
  {0x200,0x201},
  {0x202,0x203},
  {0x204,0x205},
  {0x206,0x207},
  {0x208,0x209},
  {0x20A,0x20B},
  {0x20C,0x20D},
  {0x20E,0x20F},
  {0x210,0x211},
  {0x212,0x213},
  {0x214,0x215},
  {0x216,0x217},
  {0x218,0x219},
  {0x21A,0x21B},
  {0x21C,0x21D},
  {0x21E,0x21F},
  {0x220,0x19E},
  {0x222,0x223},
  {0x224,0x225},
  {0x226,0x227},
  {0x228,0x229},
  {0x22A,0x22B},
  {0x22C,0x22D},
  {0x22E,0x22F},
  {0x230,0x231},
  {0x232,0x233},
  {0x23A,0x2C65},
  {0x23B,0x23C},
  {0x23D,0x19A},
  {0x23E,0x2C66},
  {0x241,0x242},
  {0x243,0x180},
  {0x244,0x289},
  {0x245,0x28C},
  {0x246,0x247},
  {0x248,0x249},
  {0x24A,0x24B},
  {0x24C,0x24D},
  {0x24E,0x24F},
  {0x370,0x371},
  {0x372,0x373},
  {0x376,0x377},
  {0x37F,0x3F3},
  {0x386,0x3AC},
  {0x388,0x3AD},
  {0x389,0x3AE},
  {0x38A,0x3AF},
  {0x38C,0x3CC},
  {0x38E,0x3CD},
  {0x38F,0x3CE},
  {0x391,0x3B1},
  {0x392,0x3B2},
  {0x393,0x3B3},
  {0x394,0x3B4},
  {0x395,0x3B5},
  {0x396,0x3B6},
  {0x397,0x3B7},
  {0x398,0x3B8},
  {0x399,0x3B9},
  {0x39A,0x3BA},
  {0x39B,0x3BB},
  {0x39C,0x3BC},
  {0x39D,0x3BD},
  {0x39E,0x3BE},
  {0x39F,0x3BF},
  {0x3A0,0x3C0},
  {0x3A1,0x3C1},
  {0x3A3,0x3C3},
  {0x3A4,0x3C4},
  {0x3A5,0x3C5},
  {0x3A6,0x3C6},
  {0x3A7,0x3C7},
  {0x3A8,0x3C8},
  {0x3A9,0x3C9},
  {0x3AA,0x3CA},
  {0x3AB,0x3CB},
  {0x3CF,0x3D7},
  {0x3D8,0x3D9},
  {0x3DA,0x3DB},
  {0x3DC,0x3DD},
  {0x3DE,0x3DF},
  {0x3E0,0x3E1},
  {0x3E2,0x3E3},
  {0x3E4,0x3E5},
  {0x3E6,0x3E7},
  {0x3E8,0x3E9},
  {0x3EA,0x3EB},
  {0x3EC,0x3ED},
  {0x3EE,0x3EF},
  {0x3F4,0x3B8},
  {0x3F7,0x3F8},
  {0x3F9,0x3F2},
  {0x3FA,0x3FB},
  {0x3FD,0x37B},
  {0x3FE,0x37C},
  {0x3FF,0x37D},
  {0x400,0x450},
  {0x401,0x451},
  {0x402,0x452},
  {0x403,0x453},
  {0x404,0x454},
  {0x405,0x455},
  {0x406,0x456},
  {0x407,0x457},
  {0x408,0x458},
  {0x409,0x459},
  {0x40A,0x45A},
  {0x40B,0x45B},
  {0x40C,0x45C},
  {0x40D,0x45D},
  {0x40E,0x45E},
  {0x40F,0x45F},
  {0x410,0x430},
  {0x411,0x431},
  {0x412,0x432},
  {0x413,0x433},
  {0x414,0x434},
  {0x415,0x435},
  {0x416,0x436},
  {0x417,0x437},
  {0x418,0x438},
  {0x419,0x439},
  {0x41A,0x43A},
  {0x41B,0x43B},
  {0x41C,0x43C},
  {0x41D,0x43D},
  {0x41E,0x43E},
  {0x41F,0x43F},
  {0x420,0x440},
  {0x421,0x441},
  {0x422,0x442},
  {0x423,0x443},
  {0x424,0x444},
  {0x425,0x445},
  {0x426,0x446},
  {0x427,0x447},
  {0x428,0x448},
  {0x429,0x449},
  {0x42A,0x44A},
  {0x42B,0x44B},
  {0x42C,0x44C},
  {0x42D,0x44D},
  {0x42E,0x44E},
  {0x42F,0x44F},
  {0x460,0x461},
  {0x462,0x463},
  {0x464,0x465},
  {0x466,0x467},
  {0x468,0x469},
  {0x46A,0x46B},
  {0x46C,0x46D},
  {0x46E,0x46F},
  {0x470,0x471},
  {0x472,0x473},
  {0x474,0x475},
  {0x476,0x477},
  {0x478,0x479},
  {0x47A,0x47B},
  {0x47C,0x47D},
  {0x47E,0x47F},
  {0x480,0x481},
  {0x48A,0x48B},
  {0x48C,0x48D},
  {0x48E,0x48F},
  {0x490,0x491},
  {0x492,0x493},
  {0x494,0x495},
  {0x496,0x497},
  {0x498,0x499},
  {0x49A,0x49B},
  {0x49C,0x49D},
  {0x49E,0x49F},
  {0x4A0,0x4A1},
  {0x4A2,0x4A3},
  {0x4A4,0x4A5},
  {0x4A6,0x4A7},
  {0x4A8,0x4A9},
  {0x4AA,0x4AB},
  {0x4AC,0x4AD},
  {0x4AE,0x4AF},
  {0x4B0,0x4B1},
  {0x4B2,0x4B3},
  {0x4B4,0x4B5},
  {0x4B6,0x4B7},
  {0x4B8,0x4B9},
  {0x4BA,0x4BB},
  {0x4BC,0x4BD},
  {0x4BE,0x4BF},
  {0x4C0,0x4CF},
  {0x4C1,0x4C2},
  {0x4C3,0x4C4},
  {0x4C5,0x4C6},
  {0x4C7,0x4C8},
  {0x4C9,0x4CA},
  {0x4CB,0x4CC},
  {0x4CD,0x4CE},
  {0x4D0,0x4D1},
  {0x4D2,0x4D3},
  {0x4D4,0x4D5},
  {0x4D6,0x4D7},
  {0x4D8,0x4D9},
  {0x4DA,0x4DB},
  {0x4DC,0x4DD},
  {0x4DE,0x4DF},
  {0x4E0,0x4E1},
  {0x4E2,0x4E3},
  {0x4E4,0x4E5},
  {0x4E6,0x4E7},
  {0x4E8,0x4E9},
  {0x4EA,0x4EB},
  {0x4EC,0x4ED},
  {0x4EE,0x4EF},
  {0x4F0,0x4F1},
  {0x4F2,0x4F3},
  {0x4F4,0x4F5},
  {0x4F6,0x4F7},
  {0x4F8,0x4F9},
  {0x4FA,0x4FB},
  {0x4FC,0x4FD},
  {0x4FE,0x4FF},
  {0x500,0x501},
  {0x502,0x503},
  {0x504,0x505},
  {0x506,0x507},
  {0x508,0x509},
  {0x50A,0x50B},
  {0x50C,0x50D},
  {0x50E,0x50F},
  {0x510,0x511},
  {0x512,0x513},
  {0x514,0x515},
  {0x516,0x517},
  {0x518,0x519},
  {0x51A,0x51B},
  {0x51C,0x51D},
  {0x51E,0x51F},
  {0x520,0x521},
  {0x522,0x523},
  {0x524,0x525},
  {0x526,0x527},
  {0x528,0x529},
  {0x52A,0x52B},
  {0x52C,0x52D},
  {0x52E,0x52F},
  {0x531,0x561},
  {0x532,0x562},
  {0x533,0x563},
  {0x534,0x564},
  {0x535,0x565},
  {0x536,0x566},
  {0x537,0x567},
  {0x538,0x568},
  {0x539,0x569},
  {0x53A,0x56A},
  {0x53B,0x56B},
  {0x53C,0x56C},
  {0x53D,0x56D},
  {0x53E,0x56E},
  {0x53F,0x56F},
  {0x540,0x570},
  {0x541,0x571},
  {0x542,0x572},
  {0x543,0x573},
  {0x544,0x574},
  {0x545,0x575},
  {0x546,0x576},
  {0x547,0x577},
  {0x548,0x578},
  {0x549,0x579},
  {0x54A,0x57A},
  {0x54B,0x57B},
  {0x54C,0x57C},
  {0x54D,0x57D},
  {0x54E,0x57E},
  {0x54F,0x57F},
  {0x550,0x580},
  {0x551,0x581},
  {0x552,0x582},
  {0x553,0x583},
  {0x554,0x584},
  {0x555,0x585},
  {0x556,0x586},
  {0x10A0,0x2D00},
  {0x10A1,0x2D01},
  {0x10A2,0x2D02},
  {0x10A3,0x2D03},
  {0x10A4,0x2D04},
  {0x10A5,0x2D05},
  {0x10A6,0x2D06},
  {0x10A7,0x2D07},
  {0x10A8,0x2D08},
  {0x10A9,0x2D09},
  {0x10AA,0x2D0A},
  {0x10AB,0x2D0B},
  {0x10AC,0x2D0C},
  {0x10AD,0x2D0D},
  {0x10AE,0x2D0E},
  {0x10AF,0x2D0F},
  {0x10B0,0x2D10},
  {0x10B1,0x2D11},
  {0x10B2,0x2D12},
  {0x10B3,0x2D13},
  {0x10B4,0x2D14},
  {0x10B5,0x2D15},
  {0x10B6,0x2D16},
  {0x10B7,0x2D17},
  {0x10B8,0x2D18},
  {0x10B9,0x2D19},
  {0x10BA,0x2D1A},
  {0x10BB,0x2D1B},
  {0x10BC,0x2D1C},
  {0x10BD,0x2D1D},
  {0x10BE,0x2D1E},
  {0x10BF,0x2D1F},
  {0x10C0,0x2D20},
  {0x10C1,0x2D21},
  {0x10C2,0x2D22},
  {0x10C3,0x2D23},
  {0x10C4,0x2D24},
  {0x10C5,0x2D25},
  {0x10C7,0x2D27},
  {0x10CD,0x2D2D},
  {0x13A0,0xAB70},
  {0x13A1,0xAB71},
  {0x13A2,0xAB72},
  {0x13A3,0xAB73},
  {0x13A4,0xAB74},
  {0x13A5,0xAB75},
  {0x13A6,0xAB76},
  {0x13A7,0xAB77},
  {0x13A8,0xAB78},
  {0x13A9,0xAB79},
  {0x13AA,0xAB7A},
  {0x13AB,0xAB7B},
  {0x13AC,0xAB7C},
  {0x13AD,0xAB7D},
  {0x13AE,0xAB7E},
  {0x13AF,0xAB7F},
  {0x13B0,0xAB80},
  {0x13B1,0xAB81},
  {0x13B2,0xAB82},
  {0x13B3,0xAB83},
  {0x13B4,0xAB84},
  {0x13B5,0xAB85},
  {0x13B6,0xAB86},
  {0x13B7,0xAB87},
  {0x13B8,0xAB88},
  {0x13B9,0xAB89},
  {0x13BA,0xAB8A},
  {0x13BB,0xAB8B},
  {0x13BC,0xAB8C},
  {0x13BD,0xAB8D},
  {0x13BE,0xAB8E},
  {0x13BF,0xAB8F},
  {0x13C0,0xAB90},
  {0x13C1,0xAB91},
  {0x13C2,0xAB92},
  {0x13C3,0xAB93},
  {0x13C4,0xAB94},
  {0x13C5,0xAB95},
  {0x13C6,0xAB96},
  {0x13C7,0xAB97},
  {0x13C8,0xAB98},
  {0x13C9,0xAB99},
  {0x13CA,0xAB9A},
  {0x13CB,0xAB9B},
  {0x13CC,0xAB9C},
  {0x13CD,0xAB9D},
  {0x13CE,0xAB9E},
  {0x13CF,0xAB9F},
  {0x13D0,0xABA0},
  {0x13D1,0xABA1},
  {0x13D2,0xABA2},
  {0x13D3,0xABA3},
  {0x13D4,0xABA4},
  {0x13D5,0xABA5},
  {0x13D6,0xABA6},
  {0x13D7,0xABA7},
  {0x13D8,0xABA8},
  {0x13D9,0xABA9},
  {0x13DA,0xABAA},
  {0x13DB,0xABAB},
  {0x13DC,0xABAC},
  {0x13DD,0xABAD},
  {0x13DE,0xABAE},
  {0x13DF,0xABAF},
  {0x13E0,0xABB0},
  {0x13E1,0xABB1},
  {0x13E2,0xABB2},
  {0x13E3,0xABB3},
  {0x13E4,0xABB4},
  {0x13E5,0xABB5},
  {0x13E6,0xABB6},
  {0x13E7,0xABB7},
  {0x13E8,0xABB8},
  {0x13E9,0xABB9},
  {0x13EA,0xABBA},
  {0x13EB,0xABBB},
  {0x13EC,0xABBC},
  {0x13ED,0xABBD},
  {0x13EE,0xABBE},
  {0x13EF,0xABBF},
  {0x13F0,0x13F8},
  {0x13F1,0x13F9},
  {0x13F2,0x13FA},
  {0x13F3,0x13FB},
  {0x13F4,0x13FC},
  {0x13F5,0x13FD},
  {0x1C90,0x10D0},
  {0x1C91,0x10D1},
  {0x1C92,0x10D2},
  {0x1C93,0x10D3},
  {0x1C94,0x10D4},
  {0x1C95,0x10D5},
  {0x1C96,0x10D6},
  {0x1C97,0x10D7},
  {0x1C98,0x10D8},
  {0x1C99,0x10D9},
  {0x1C9A,0x10DA},
  {0x1C9B,0x10DB},
  {0x1C9C,0x10DC},
  {0x1C9D,0x10DD},
  {0x1C9E,0x10DE},
  {0x1C9F,0x10DF},
  {0x1CA0,0x10E0},
  {0x1CA1,0x10E1},
  {0x1CA2,0x10E2},
  {0x1CA3,0x10E3},
  {0x1CA4,0x10E4},
  {0x1CA5,0x10E5},
  {0x1CA6,0x10E6},
  {0x1CA7,0x10E7},
  {0x1CA8,0x10E8},
  {0x1CA9,0x10E9},
  {0x1CAA,0x10EA},
  {0x1CAB,0x10EB},
  {0x1CAC,0x10EC},
  {0x1CAD,0x10ED},
  {0x1CAE,0x10EE},
  {0x1CAF,0x10EF},
  {0x1CB0,0x10F0},
  {0x1CB1,0x10F1},
  {0x1CB2,0x10F2},
  {0x1CB3,0x10F3},
  {0x1CB4,0x10F4},
  {0x1CB5,0x10F5},
  {0x1CB6,0x10F6},
  {0x1CB7,0x10F7},
  {0x1CB8,0x10F8},
  {0x1CB9,0x10F9},
  {0x1CBA,0x10FA},
  {0x1CBD,0x10FD},
  {0x1CBE,0x10FE},
  {0x1CBF,0x10FF},
  {0x1E00,0x1E01},
  {0x1E02,0x1E03},
  {0x1E04,0x1E05},
  {0x1E06,0x1E07},
  {0x1E08,0x1E09},
  {0x1E0A,0x1E0B},
  {0x1E0C,0x1E0D},
  {0x1E0E,0x1E0F},
  {0x1E10,0x1E11},
  {0x1E12,0x1E13},
  {0x1E14,0x1E15},
  {0x1E16,0x1E17},
  {0x1E18,0x1E19},
  {0x1E1A,0x1E1B},
  {0x1E1C,0x1E1D},
  {0x1E1E,0x1E1F},
  {0x1E20,0x1E21},
  {0x1E22,0x1E23},
  {0x1E24,0x1E25},
  {0x1E26,0x1E27},
  {0x1E28,0x1E29},
  {0x1E2A,0x1E2B},
  {0x1E2C,0x1E2D},
  {0x1E2E,0x1E2F},
  {0x1E30,0x1E31},
  {0x1E32,0x1E33},
  {0x1E34,0x1E35},
  {0x1E36,0x1E37},
  {0x1E38,0x1E39},
  {0x1E3A,0x1E3B},
  {0x1E3C,0x1E3D},
  {0x1E3E,0x1E3F},
  {0x1E40,0x1E41},
  {0x1E42,0x1E43},
  {0x1E44,0x1E45},
  {0x1E46,0x1E47},
  {0x1E48,0x1E49},
  {0x1E4A,0x1E4B},
  {0x1E4C,0x1E4D},
  {0x1E4E,0x1E4F},
  {0x1E50,0x1E51},
  {0x1E52,0x1E53},
  {0x1E54,0x1E55},
  {0x1E56,0x1E57},
  {0x1E58,0x1E59},
  {0x1E5A,0x1E5B},
  {0x1E5C,0x1E5D},
  {0x1E5E,0x1E5F},
  {0x1E60,0x1E61},
  {0x1E62,0x1E63},
  {0x1E64,0x1E65},
  {0x1E66,0x1E67},
  {0x1E68,0x1E69},
  {0x1E6A,0x1E6B},
  {0x1E6C,0x1E6D},
  {0x1E6E,0x1E6F},
  {0x1E70,0x1E71},
  {0x1E72,0x1E73},
  {0x1E74,0x1E75},
  {0x1E76,0x1E77},
  {0x1E78,0x1E79},
  {0x1E7A,0x1E7B},
  {0x1E7C,0x1E7D},
  {0x1E7E,0x1E7F},
  {0x1E80,0x1E81},
  {0x1E82,0x1E83},
  {0x1E84,0x1E85},
  {0x1E86,0x1E87},
  {0x1E88,0x1E89},
  {0x1E8A,0x1E8B},
  {0x1E8C,0x1E8D},
  {0x1E8E,0x1E8F},
  {0x1E90,0x1E91},
  {0x1E92,0x1E93},
  {0x1E94,0x1E95},
  {0x1E9E,0xDF},
  {0x1EA0,0x1EA1},
  {0x1EA2,0x1EA3},
  {0x1EA4,0x1EA5},
  {0x1EA6,0x1EA7},
  {0x1EA8,0x1EA9},
  {0x1EAA,0x1EAB},
  {0x1EAC,0x1EAD},
  {0x1EAE,0x1EAF},
  {0x1EB0,0x1EB1},
  {0x1EB2,0x1EB3},
  {0x1EB4,0x1EB5},
  {0x1EB6,0x1EB7},
  {0x1EB8,0x1EB9},
  {0x1EBA,0x1EBB},
  {0x1EBC,0x1EBD},
  {0x1EBE,0x1EBF},
  {0x1EC0,0x1EC1},
  {0x1EC2,0x1EC3},
  {0x1EC4,0x1EC5},
  {0x1EC6,0x1EC7},
  {0x1EC8,0x1EC9},
  {0x1ECA,0x1ECB},
  {0x1ECC,0x1ECD},
  {0x1ECE,0x1ECF},
  {0x1ED0,0x1ED1},
  {0x1ED2,0x1ED3},
  {0x1ED4,0x1ED5},
  {0x1ED6,0x1ED7},
  {0x1ED8,0x1ED9},
  {0x1EDA,0x1EDB},
  {0x1EDC,0x1EDD},
  {0x1EDE,0x1EDF},
  {0x1EE0,0x1EE1},
  {0x1EE2,0x1EE3},
  {0x1EE4,0x1EE5},
  {0x1EE6,0x1EE7},
  {0x1EE8,0x1EE9},
  {0x1EEA,0x1EEB},
  {0x1EEC,0x1EED},
  {0x1EEE,0x1EEF},
  {0x1EF0,0x1EF1},
  {0x1EF2,0x1EF3},
  {0x1EF4,0x1EF5},
  {0x1EF6,0x1EF7},
  {0x1EF8,0x1EF9},
  {0x1EFA,0x1EFB},
  {0x1EFC,0x1EFD},
  {0x1EFE,0x1EFF},
  {0x1F08,0x1F00},
  {0x1F09,0x1F01},
  {0x1F0A,0x1F02},
  {0x1F0B,0x1F03},
  {0x1F0C,0x1F04},
  {0x1F0D,0x1F05},
  {0x1F0E,0x1F06},
  {0x1F0F,0x1F07},
  {0x1F18,0x1F10},
  {0x1F19,0x1F11},
  {0x1F1A,0x1F12},
  {0x1F1B,0x1F13},
  {0x1F1C,0x1F14},
  {0x1F1D,0x1F15},
  {0x1F28,0x1F20},
  {0x1F29,0x1F21},
  {0x1F2A,0x1F22},
  {0x1F2B,0x1F23},
  {0x1F2C,0x1F24},
  {0x1F2D,0x1F25},
  {0x1F2E,0x1F26},
  {0x1F2F,0x1F27},
  {0x1F38,0x1F30},
  {0x1F39,0x1F31},
  {0x1F3A,0x1F32},
  {0x1F3B,0x1F33},
  {0x1F3C,0x1F34},
  {0x1F3D,0x1F35},
  {0x1F3E,0x1F36},
  {0x1F3F,0x1F37},
  {0x1F48,0x1F40},
  {0x1F49,0x1F41},
  {0x1F4A,0x1F42},
  {0x1F4B,0x1F43},
  {0x1F4C,0x1F44},
  {0x1F4D,0x1F45},
  {0x1F59,0x1F51},
  {0x1F5B,0x1F53},
  {0x1F5D,0x1F55},
  {0x1F5F,0x1F57},
  {0x1F68,0x1F60},
  {0x1F69,0x1F61},
  {0x1F6A,0x1F62},
  {0x1F6B,0x1F63},
  {0x1F6C,0x1F64},
  {0x1F6D,0x1F65},
  {0x1F6E,0x1F66},
  {0x1F6F,0x1F67},
  {0x1F88,0x1F80},
  {0x1F89,0x1F81},
  {0x1F8A,0x1F82},
  {0x1F8B,0x1F83},
  {0x1F8C,0x1F84},
  {0x1F8D,0x1F85},
  {0x1F8E,0x1F86},
  {0x1F8F,0x1F87},
  {0x1F98,0x1F90},
  {0x1F99,0x1F91},
  {0x1F9A,0x1F92},
  {0x1F9B,0x1F93},
  {0x1F9C,0x1F94},
  {0x1F9D,0x1F95},
  {0x1F9E,0x1F96},
  {0x1F9F,0x1F97},
  {0x1FA8,0x1FA0},
  {0x1FA9,0x1FA1},
  {0x1FAA,0x1FA2},
  {0x1FAB,0x1FA3},
  {0x1FAC,0x1FA4},
  {0x1FAD,0x1FA5},
  {0x1FAE,0x1FA6},
  {0x1FAF,0x1FA7},
  {0x1FB8,0x1FB0},
  {0x1FB9,0x1FB1},
  {0x1FBA,0x1F70},
  {0x1FBB,0x1F71},
  {0x1FBC,0x1FB3},
  {0x1FC8,0x1F72},
  {0x1FC9,0x1F73},
  {0x1FCA,0x1F74},
  {0x1FCB,0x1F75},
  {0x1FCC,0x1FC3},
  {0x1FD8,0x1FD0},
  {0x1FD9,0x1FD1},
  {0x1FDA,0x1F76},
  {0x1FDB,0x1F77},
  {0x1FE8,0x1FE0},
  {0x1FE9,0x1FE1},
  {0x1FEA,0x1F7A},
  {0x1FEB,0x1F7B},
  {0x1FEC,0x1FE5},
  {0x1FF8,0x1F78},
  {0x1FF9,0x1F79},
  {0x1FFA,0x1F7C},
  {0x1FFB,0x1F7D},
  {0x1FFC,0x1FF3},
  {0x2126,0x3C9},
  {0x212A,0x6B},
  {0x212B,0xE5},
  {0x2132,0x214E},
  {0x2160,0x2170},
  {0x2161,0x2171},
  {0x2162,0x2172},
  {0x2163,0x2173},
  {0x2164,0x2174},
  {0x2165,0x2175},
  {0x2166,0x2176},
  {0x2167,0x2177},
  {0x2168,0x2178},
  {0x2169,0x2179},
  {0x216A,0x217A},
  {0x216B,0x217B},
  {0x216C,0x217C},
  {0x216D,0x217D},
  {0x216E,0x217E},
  {0x216F,0x217F},
  {0x2183,0x2184},
  {0x24B6,0x24D0},
  {0x24B7,0x24D1},
  {0x24B8,0x24D2},
  {0x24B9,0x24D3},
  {0x24BA,0x24D4},
  {0x24BB,0x24D5},
  {0x24BC,0x24D6},
  {0x24BD,0x24D7},
  {0x24BE,0x24D8},
  {0x24BF,0x24D9},
  {0x24C0,0x24DA},
  {0x24C1,0x24DB},
  {0x24C2,0x24DC},
  {0x24C3,0x24DD},
  {0x24C4,0x24DE},
  {0x24C5,0x24DF},
  {0x24C6,0x24E0},
  {0x24C7,0x24E1},
  {0x24C8,0x24E2},
  {0x24C9,0x24E3},
  {0x24CA,0x24E4},
  {0x24CB,0x24E5},
  {0x24CC,0x24E6},
  {0x24CD,0x24E7},
  {0x24CE,0x24E8},
  {0x24CF,0x24E9},
  {0x2C00,0x2C30},
  {0x2C01,0x2C31},
  {0x2C02,0x2C32},
  {0x2C03,0x2C33},
  {0x2C04,0x2C34},
  {0x2C05,0x2C35},
  {0x2C06,0x2C36},
  {0x2C07,0x2C37},
  {0x2C08,0x2C38},
  {0x2C09,0x2C39},
  {0x2C0A,0x2C3A},
  {0x2C0B,0x2C3B},
  {0x2C0C,0x2C3C},
  {0x2C0D,0x2C3D},
  {0x2C0E,0x2C3E},
  {0x2C0F,0x2C3F},
  {0x2C10,0x2C40},
  {0x2C11,0x2C41},
  {0x2C12,0x2C42},
  {0x2C13,0x2C43},
  {0x2C14,0x2C44},
  {0x2C15,0x2C45},
  {0x2C16,0x2C46},
  {0x2C17,0x2C47},
  {0x2C18,0x2C48},
  {0x2C19,0x2C49},
  {0x2C1A,0x2C4A},
  {0x2C1B,0x2C4B},
  {0x2C1C,0x2C4C},
  {0x2C1D,0x2C4D},
  {0x2C1E,0x2C4E},
  {0x2C1F,0x2C4F},
  {0x2C20,0x2C50},
  {0x2C21,0x2C51},
  {0x2C22,0x2C52},
  {0x2C23,0x2C53},
  {0x2C24,0x2C54},
  {0x2C25,0x2C55},
  {0x2C26,0x2C56},
  {0x2C27,0x2C57},
  {0x2C28,0x2C58},
  {0x2C29,0x2C59},
  {0x2C2A,0x2C5A},
  {0x2C2B,0x2C5B},
  {0x2C2C,0x2C5C},
  {0x2C2D,0x2C5D},
  {0x2C2E,0x2C5E},
  {0x2C60,0x2C61},
  {0x2C62,0x26B},
  {0x2C63,0x1D7D},
  {0x2C64,0x27D},
  {0x2C67,0x2C68},
  {0x2C69,0x2C6A},
  {0x2C6B,0x2C6C},
  {0x2C6D,0x251},
  {0x2C6E,0x271},
  {0x2C6F,0x250},
  {0x2C70,0x252},
  {0x2C72,0x2C73},
  {0x2C75,0x2C76},
  {0x2C7E,0x23F},
  {0x2C7F,0x240},
  {0x2C80,0x2C81},
  {0x2C82,0x2C83},
  {0x2C84,0x2C85},
  {0x2C86,0x2C87},
  {0x2C88,0x2C89},
  {0x2C8A,0x2C8B},
  {0x2C8C,0x2C8D},
  {0x2C8E,0x2C8F},
  {0x2C90,0x2C91},
  {0x2C92,0x2C93},
  {0x2C94,0x2C95},
  {0x2C96,0x2C97},
  {0x2C98,0x2C99},
  {0x2C9A,0x2C9B},
  {0x2C9C,0x2C9D},
  {0x2C9E,0x2C9F},
  {0x2CA0,0x2CA1},
  {0x2CA2,0x2CA3},
  {0x2CA4,0x2CA5},
  {0x2CA6,0x2CA7},
  {0x2CA8,0x2CA9},
  {0x2CAA,0x2CAB},
  {0x2CAC,0x2CAD},
  {0x2CAE,0x2CAF},
  {0x2CB0,0x2CB1},
  {0x2CB2,0x2CB3},
  {0x2CB4,0x2CB5},
  {0x2CB6,0x2CB7},
  {0x2CB8,0x2CB9},
  {0x2CBA,0x2CBB},
  {0x2CBC,0x2CBD},
  {0x2CBE,0x2CBF},
  {0x2CC0,0x2CC1},
  {0x2CC2,0x2CC3},
  {0x2CC4,0x2CC5},
  {0x2CC6,0x2CC7},
  {0x2CC8,0x2CC9},
  {0x2CCA,0x2CCB},
  {0x2CCC,0x2CCD},
  {0x2CCE,0x2CCF},
  {0x2CD0,0x2CD1},
  {0x2CD2,0x2CD3},
  {0x2CD4,0x2CD5},
  {0x2CD6,0x2CD7},
  {0x2CD8,0x2CD9},
  {0x2CDA,0x2CDB},
  {0x2CDC,0x2CDD},
  {0x2CDE,0x2CDF},
  {0x2CE0,0x2CE1},
  {0x2CE2,0x2CE3},
  {0x2CEB,0x2CEC},
  {0x2CED,0x2CEE},
  {0x2CF2,0x2CF3},
  {0xA640,0xA641},
  {0xA642,0xA643},
  {0xA644,0xA645},
  {0xA646,0xA647},
  {0xA648,0xA649},
  {0xA64A,0xA64B},
  {0xA64C,0xA64D},
  {0xA64E,0xA64F},
  {0xA650,0xA651},
  {0xA652,0xA653},
  {0xA654,0xA655},
  {0xA656,0xA657},
  {0xA658,0xA659},
  {0xA65A,0xA65B},
  {0xA65C,0xA65D},
  {0xA65E,0xA65F},
  {0xA660,0xA661},
  {0xA662,0xA663},
  {0xA664,0xA665},
  {0xA666,0xA667},
  {0xA668,0xA669},
  {0xA66A,0xA66B},
  {0xA66C,0xA66D},
  {0xA680,0xA681},
  {0xA682,0xA683},
  {0xA684,0xA685},
  {0xA686,0xA687},
  {0xA688,0xA689},
  {0xA68A,0xA68B},
  {0xA68C,0xA68D},
  {0xA68E,0xA68F},
  {0xA690,0xA691},
  {0xA692,0xA693},
  {0xA694,0xA695},
  {0xA696,0xA697},
  {0xA698,0xA699},
  {0xA69A,0xA69B},
  {0xA722,0xA723},
  {0xA724,0xA725},
  {0xA726,0xA727},
  {0xA728,0xA729},
  {0xA72A,0xA72B},
  {0xA72C,0xA72D},
  {0xA72E,0xA72F},
  {0xA732,0xA733},
  {0xA734,0xA735},
  {0xA736,0xA737},
  {0xA738,0xA739},
  {0xA73A,0xA73B},
  {0xA73C,0xA73D},
  {0xA73E,0xA73F},
  {0xA740,0xA741},
  {0xA742,0xA743},
  {0xA744,0xA745},
  {0xA746,0xA747},
  {0xA748,0xA749},
  {0xA74A,0xA74B},
  {0xA74C,0xA74D},
  {0xA74E,0xA74F},
  {0xA750,0xA751},
  {0xA752,0xA753},
  {0xA754,0xA755},
  {0xA756,0xA757},
  {0xA758,0xA759},
  {0xA75A,0xA75B},
  {0xA75C,0xA75D},
  {0xA75E,0xA75F},
  {0xA760,0xA761},
  {0xA762,0xA763},
  {0xA764,0xA765},
  {0xA766,0xA767},
  {0xA768,0xA769},
  {0xA76A,0xA76B},
  {0xA76C,0xA76D},
  {0xA76E,0xA76F},
  {0xA779,0xA77A},
  {0xA77B,0xA77C},
  {0xA77D,0x1D79},
  {0xA77E,0xA77F},
  {0xA780,0xA781},
  {0xA782,0xA783},
  {0xA784,0xA785},
  {0xA786,0xA787},
  {0xA78B,0xA78C},
  {0xA78D,0x265},
  {0xA790,0xA791},
  {0xA792,0xA793},
  {0xA796,0xA797},
  {0xA798,0xA799},
  {0xA79A,0xA79B},
  {0xA79C,0xA79D},
  {0xA79E,0xA79F},
  {0xA7A0,0xA7A1},
  {0xA7A2,0xA7A3},
  {0xA7A4,0xA7A5},
  {0xA7A6,0xA7A7},
  {0xA7A8,0xA7A9},
  {0xA7AA,0x266},
  {0xA7AB,0x25C},
  {0xA7AC,0x261},
  {0xA7AD,0x26C},
  {0xA7AE,0x26A},
  {0xA7B0,0x29E},
  {0xA7B1,0x287},
  {0xA7B2,0x29D},
  {0xA7B3,0xAB53},
  {0xA7B4,0xA7B5},
  {0xA7B6,0xA7B7},
  {0xA7B8,0xA7B9},
  {0xA7BA,0xA7BB},
  {0xA7BC,0xA7BD},
  {0xA7BE,0xA7BF},
  {0xA7C2,0xA7C3},
  {0xA7C4,0xA794},
  {0xA7C5,0x282},
  {0xA7C6,0x1D8E},
  {0xA7C7,0xA7C8},
  {0xA7C9,0xA7CA},
  {0xA7F5,0xA7F6},
  {0xFF21,0xFF41},
  {0xFF22,0xFF42},
  {0xFF23,0xFF43},
  {0xFF24,0xFF44},
  {0xFF25,0xFF45},
  {0xFF26,0xFF46},
  {0xFF27,0xFF47},
  {0xFF28,0xFF48},
  {0xFF29,0xFF49},
  {0xFF2A,0xFF4A},
  {0xFF2B,0xFF4B},
  {0xFF2C,0xFF4C},
  {0xFF2D,0xFF4D},
  {0xFF2E,0xFF4E},
  {0xFF2F,0xFF4F},
  {0xFF30,0xFF50},
  {0xFF31,0xFF51},
  {0xFF32,0xFF52},
  {0xFF33,0xFF53},
  {0xFF34,0xFF54},
  {0xFF35,0xFF55},
  {0xFF36,0xFF56},
  {0xFF37,0xFF57},
  {0xFF38,0xFF58},
  {0xFF39,0xFF59},
  {0xFF3A,0xFF5A},
  {0x10400,0x10428},
  {0x10401,0x10429},
  {0x10402,0x1042A},
  {0x10403,0x1042B},
  {0x10404,0x1042C},
  {0x10405,0x1042D},
  {0x10406,0x1042E},
  {0x10407,0x1042F},
  {0x10408,0x10430},
  {0x10409,0x10431},
  {0x1040A,0x10432},
  {0x1040B,0x10433},
  {0x1040C,0x10434},
  {0x1040D,0x10435},
  {0x1040E,0x10436},
  {0x1040F,0x10437},
  {0x10410,0x10438},
  {0x10411,0x10439},
  {0x10412,0x1043A},
  {0x10413,0x1043B},
  {0x10414,0x1043C},
  {0x10415,0x1043D},
  {0x10416,0x1043E},
  {0x10417,0x1043F},
  {0x10418,0x10440},
  {0x10419,0x10441},
  {0x1041A,0x10442},
  {0x1041B,0x10443},
  {0x1041C,0x10444},
  {0x1041D,0x10445},
  {0x1041E,0x10446},
  {0x1041F,0x10447},
  {0x10420,0x10448},
  {0x10421,0x10449},
  {0x10422,0x1044A},
  {0x10423,0x1044B},
  {0x10424,0x1044C},
  {0x10425,0x1044D},
  {0x10426,0x1044E},
  {0x10427,0x1044F},
  {0x104B0,0x104D8},
  {0x104B1,0x104D9},
  {0x104B2,0x104DA},
  {0x104B3,0x104DB},
  {0x104B4,0x104DC},
  {0x104B5,0x104DD},
  {0x104B6,0x104DE},
  {0x104B7,0x104DF},
  {0x104B8,0x104E0},
  {0x104B9,0x104E1},
  {0x104BA,0x104E2},
  {0x104BB,0x104E3},
  {0x104BC,0x104E4},
  {0x104BD,0x104E5},
  {0x104BE,0x104E6},
  {0x104BF,0x104E7},
  {0x104C0,0x104E8},
  {0x104C1,0x104E9},
  {0x104C2,0x104EA},
  {0x104C3,0x104EB},
  {0x104C4,0x104EC},
  {0x104C5,0x104ED},
  {0x104C6,0x104EE},
  {0x104C7,0x104EF},
  {0x104C8,0x104F0},
  {0x104C9,0x104F1},
  {0x104CA,0x104F2},
  {0x104CB,0x104F3},
  {0x104CC,0x104F4},
  {0x104CD,0x104F5},
  {0x104CE,0x104F6},
  {0x104CF,0x104F7},
  {0x104D0,0x104F8},
  {0x104D1,0x104F9},
  {0x104D2,0x104FA},
  {0x104D3,0x104FB},
  {0x10C80,0x10CC0},
  {0x10C81,0x10CC1},
  {0x10C82,0x10CC2},
  {0x10C83,0x10CC3},
  {0x10C84,0x10CC4},
  {0x10C85,0x10CC5},
  {0x10C86,0x10CC6},
  {0x10C87,0x10CC7},
  {0x10C88,0x10CC8},
  {0x10C89,0x10CC9},
  {0x10C8A,0x10CCA},
  {0x10C8B,0x10CCB},
  {0x10C8C,0x10CCC},
  {0x10C8D,0x10CCD},
  {0x10C8E,0x10CCE},
  {0x10C8F,0x10CCF},
  {0x10C90,0x10CD0},
  {0x10C91,0x10CD1},
  {0x10C92,0x10CD2},
  {0x10C93,0x10CD3},
  {0x10C94,0x10CD4},
  {0x10C95,0x10CD5},
  {0x10C96,0x10CD6},
  {0x10C97,0x10CD7},
  {0x10C98,0x10CD8},
  {0x10C99,0x10CD9},
  {0x10C9A,0x10CDA},
  {0x10C9B,0x10CDB},
  {0x10C9C,0x10CDC},
  {0x10C9D,0x10CDD},
  {0x10C9E,0x10CDE},
  {0x10C9F,0x10CDF},
  {0x10CA0,0x10CE0},
  {0x10CA1,0x10CE1},
  {0x10CA2,0x10CE2},
  {0x10CA3,0x10CE3},
  {0x10CA4,0x10CE4},
  {0x10CA5,0x10CE5},
  {0x10CA6,0x10CE6},
  {0x10CA7,0x10CE7},
  {0x10CA8,0x10CE8},
  {0x10CA9,0x10CE9},
  {0x10CAA,0x10CEA},
  {0x10CAB,0x10CEB},
  {0x10CAC,0x10CEC},
  {0x10CAD,0x10CED},
  {0x10CAE,0x10CEE},
  {0x10CAF,0x10CEF},
  {0x10CB0,0x10CF0},
  {0x10CB1,0x10CF1},
  {0x10CB2,0x10CF2},
  {0x118A0,0x118C0},
  {0x118A1,0x118C1},
  {0x118A2,0x118C2},
  {0x118A3,0x118C3},
  {0x118A4,0x118C4},
  {0x118A5,0x118C5},
  {0x118A6,0x118C6},
  {0x118A7,0x118C7},
  {0x118A8,0x118C8},
  {0x118A9,0x118C9},
  {0x118AA,0x118CA},
  {0x118AB,0x118CB},
  {0x118AC,0x118CC},
  {0x118AD,0x118CD},
  {0x118AE,0x118CE},
  {0x118AF,0x118CF},
  {0x118B0,0x118D0},
  {0x118B1,0x118D1},
  {0x118B2,0x118D2},
  {0x118B3,0x118D3},
  {0x118B4,0x118D4},
  {0x118B5,0x118D5},
  {0x118B6,0x118D6},
  {0x118B7,0x118D7},
  {0x118B8,0x118D8},
  {0x118B9,0x118D9},
  {0x118BA,0x118DA},
  {0x118BB,0x118DB},
  {0x118BC,0x118DC},
  {0x118BD,0x118DD},
  {0x118BE,0x118DE},
  {0x118BF,0x118DF},
  {0x16E40,0x16E60},
  {0x16E41,0x16E61},
  {0x16E42,0x16E62},
  {0x16E43,0x16E63},
  {0x16E44,0x16E64},
  {0x16E45,0x16E65},
  {0x16E46,0x16E66},
  {0x16E47,0x16E67},
  {0x16E48,0x16E68},
  {0x16E49,0x16E69},
  {0x16E4A,0x16E6A},
  {0x16E4B,0x16E6B},
  {0x16E4C,0x16E6C},
  {0x16E4D,0x16E6D},
  {0x16E4E,0x16E6E},
  {0x16E4F,0x16E6F},
  {0x16E50,0x16E70},
  {0x16E51,0x16E71},
  {0x16E52,0x16E72},
  {0x16E53,0x16E73},
  {0x16E54,0x16E74},
  {0x16E55,0x16E75},
  {0x16E56,0x16E76},
  {0x16E57,0x16E77},
  {0x16E58,0x16E78},
  {0x16E59,0x16E79},
  {0x16E5A,0x16E7A},
  {0x16E5B,0x16E7B},
  {0x16E5C,0x16E7C},
  {0x16E5D,0x16E7D},
  {0x16E5E,0x16E7E},
  {0x16E5F,0x16E7F},
  {0x1E900,0x1E922},
  {0x1E901,0x1E923},
  {0x1E902,0x1E924},
  {0x1E903,0x1E925},
  {0x1E904,0x1E926},
  {0x1E905,0x1E927},
  {0x1E906,0x1E928},
  {0x1E907,0x1E929},
  {0x1E908,0x1E92A},
  {0x1E909,0x1E92B},
  {0x1E90A,0x1E92C},
  {0x1E90B,0x1E92D},
  {0x1E90C,0x1E92E},
  {0x1E90D,0x1E92F},
  {0x1E90E,0x1E930},
  {0x1E90F,0x1E931},
  {0x1E910,0x1E932},
  {0x1E911,0x1E933},
  {0x1E912,0x1E934},
  {0x1E913,0x1E935},
  {0x1E914,0x1E936},
  {0x1E915,0x1E937},
  {0x1E916,0x1E938},
  {0x1E917,0x1E939},
  {0x1E918,0x1E93A},
  {0x1E919,0x1E93B},
  {0x1E91A,0x1E93C},
  {0x1E91B,0x1E93D},
  {0x1E91C,0x1E93E},
  {0x1E91D,0x1E93F},
  {0x1E91E,0x1E940},
  {0x1E91F,0x1E941},
  {0x1E920,0x1E942},
  {0x1E921,0x1E943},
};
const std::size_t kLowerEntryCount = 1392;

}  // namespace charcrf::detail
