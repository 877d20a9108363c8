#pragma once

// Generated by freeze_values.py (mpmath, 50 digits). Do not edit.

namespace oracle {

struct GammaRow { double x, value; };
inline constexpr GammaRow kGamma[] = {
    {0.1, 9.5135076986687318363},
    {0.5, 1.7724538509055160273},
    {1.5, 0.88622692545275801365},
    {3.7, 4.1706517837966031654},
    {-0.5, -3.5449077018110320546},
    {-2.3, -1.4471073942559172639},
    {10.25, 639232.59877957679428},
    {25.5, 3.0867705405286967828e+24},
    {150.3, 1.7112969992194792781e+261},
};

struct Hyp2f1Row { double a, b, c, z, value; };
inline constexpr Hyp2f1Row kHyp2f1[] = {
    {-0.4, 0.4, 0.6, 0.5, 0.84280281688116129771},
    {-0.4, 0.4, 0.6, -0.3, 1.0744881278916073928},
    {-0.4, 0.4, 0.6, -0.95, 1.2091570408941387534},
    {-0.4, 0.4, 0.6, -3.0, 1.5184632045749833807},
    {-0.4, 0.4, 0.6, -8.5, 2.0479736636734333947},
    {-0.4, 0.4, 0.6, -20.0, 2.7401923211925125508},
    {-0.4, 0.4, 0.6, -1000.0, 12.419413033381591968},
    {-0.4, 0.4, 0.6, -1000000.0, 196.33651109410447335},
    {-0.25, 0.25, 0.75, 0.5, 0.95081278048100968744},
    {-0.25, 0.25, 0.75, -0.3, 1.0232358182975937442},
    {-0.25, 0.25, 0.75, -0.95, 1.0649579191281113508},
    {-0.25, 0.25, 0.75, -3.0, 1.1589091559900094812},
    {-0.25, 0.25, 0.75, -8.5, 1.3129762820731556714},
    {-0.25, 0.25, 0.75, -20.0, 1.5023473003750214774},
    {-0.25, 0.25, 0.75, -1000.0, 3.4577254006069225066},
    {-0.25, 0.25, 0.75, -1000000.0, 18.960071877249533183},
    {-0.1, 0.1, 0.9, 0.5, 0.99348249453878956295},
    {-0.1, 0.1, 0.9, -0.3, 1.0031034578701246094},
    {-0.1, 0.1, 0.9, -0.95, 1.0086916589170529572},
    {-0.1, 0.1, 0.9, -3.0, 1.0212661155563358277},
    {-0.1, 0.1, 0.9, -8.5, 1.0416412400381948253},
    {-0.1, 0.1, 0.9, -20.0, 1.0660585268518387469},
    {-0.1, 0.1, 0.9, -1000.0, 1.2795024756213608998},
    {-0.1, 0.1, 0.9, -1000000.0, 2.1785457218334656742},
    {0.1, -0.1, 1.1, 0.5, 0.99475718146425443925},
    {0.1, -0.1, 1.1, -0.3, 1.0025557945672450068},
    {0.1, -0.1, 1.1, -0.95, 1.0072300040545502631},
    {0.1, -0.1, 1.1, -3.0, 1.0179977862322425985},
    {0.1, -0.1, 1.1, -8.5, 1.035924194504743282},
    {0.1, -0.1, 1.1, -20.0, 1.0578844690880197339},
    {0.1, -0.1, 1.1, -1000.0, 1.257336465325478577},
    {0.1, -0.1, 1.1, -1000000.0, 2.1207092853002865711},
    {0.25, -0.25, 1.25, 0.5, 0.97166790712514865791},
    {0.25, -0.25, 1.25, -0.3, 1.0141608927983499351},
    {0.25, -0.25, 1.25, -0.95, 1.0405477113274702498},
    {0.25, -0.25, 1.25, -3.0, 1.1033387389235501646},
    {0.25, -0.25, 1.25, -8.5, 1.2128914720416053108},
    {0.25, -0.25, 1.25, -20.0, 1.3542089349320120173},
    {0.25, -0.25, 1.25, -1000.0, 2.9275725611487188688},
    {0.25, -0.25, 1.25, -1000000.0, 15.832113533064349825},
    {0.4, -0.4, 1.4, 0.5, 0.93657551121258706836},
    {0.4, -0.4, 1.4, -0.3, 1.0326628992944548727},
    {0.4, -0.4, 1.4, -0.95, 1.0949714200401580686},
    {0.4, -0.4, 1.4, -3.0, 1.2496943326326565111},
    {0.4, -0.4, 1.4, -8.5, 1.5376500947588761117},
    {0.4, -0.4, 1.4, -20.0, 1.9375977090681414407},
    {0.4, -0.4, 1.4, -1000.0, 7.9980782548083602574},
    {0.4, -0.4, 1.4, -1000000.0, 125.59956520624602964},
    {1.0, 1.0, 2.0, -0.5, 0.81093021621632876396},
    {0.3, 1.7, 2.2, -15.0, 0.47966633645443794575},
    {1.5, -0.25, 0.5, -40.0, 3.764800282940239392},
    {2.0, 3.0, 4.5, 0.9, 12.862862523589220564},
};

struct MittagLefflerRow { double alpha, beta, z, value; };
inline constexpr MittagLefflerRow kMittagLeffler[] = {
    {0.5, 1.0, -5.0, 0.11070463773306862637},
    {0.5, 1.0, -40.0, 0.014100335983377813625},
    {0.5, 2.0, -3.0, 0.28490429471865863023},
    {1.5, 2.0, -10.0, 0.045888794773684101781},
    {1.5, 2.0, -2.5, 0.46088371606087079683},
    {0.8, 1.2, 30.0, 1.6581640489535343793e+30},
    {0.8, 1.2, -30.0, 0.015333512592771701355},
    {1.25, 2.0, -0.8, 0.7352381115553912254},
    {0.3, 0.7, -3.0, 0.13497528427725865766},
    {1.9, 2.0, -50.0, 0.071750290804921769448},
    {2.0, 1.0, -4.0, -0.416146836547142387},
    {0.6, 1.5, 2.5, 77.242587409931005141},
};

struct KernelRow { double h, t, s, value; };
inline constexpr KernelRow kKernel[] = {
    {0.1, 1.0, 0.5, 1.0795988569585927116},
    {0.1, 1.0, 0.01, 3.3652080579714557476},
    {0.1, 2.5, 2.4, 1.7052849455211730502},
    {0.1, 1.0, 0.999, 10.645476726465874925},
    {0.25, 1.0, 0.5, 1.0362623459594761341},
    {0.25, 1.0, 0.01, 1.6755143106840437844},
    {0.25, 2.5, 2.4, 1.4561466416453855963},
    {0.25, 1.0, 0.999, 4.5893631135708845132},
    {0.75, 1.0, 0.5, 0.96705967743735027333},
    {0.75, 1.0, 0.01, 1.9599873186513140815},
    {0.75, 2.5, 2.4, 0.62169166754668430652},
    {0.75, 1.0, 0.999, 0.19620074298960726246},
    {0.9, 1.0, 0.5, 0.93905145151469382876},
    {0.9, 1.0, 0.01, 3.7144793274279981321},
    {0.9, 2.5, 2.4, 0.45081214891506295535},
    {0.9, 1.0, 0.999, 0.071120843765359082392},
};

struct PanelRow { double h, t, lo, hi, value; };
inline constexpr PanelRow kPanel[] = {
    {0.1, 1.0, 0.0, 1.0, 1.4787730291717921487},
    {0.1, 5.0, 0.0, 1.0, 0.94635585512746822928},
    {0.1, 5.0, 4.0, 5.0, 1.143868670065297095},
    {0.1, 5.0, 2.0, 3.0, 0.57003859074433497567},
    {0.1, 2.0, 0.0, 2.0, 2.241400778424449538},
    {0.3, 1.0, 0.0, 1.0, 1.1477109279997007633},
    {0.3, 5.0, 0.0, 1.0, 0.79969899881237703341},
    {0.3, 5.0, 4.0, 5.0, 1.0789550598241675191},
    {0.3, 5.0, 2.0, 3.0, 0.74575890273776091055},
    {0.3, 2.0, 0.0, 2.0, 1.9982807897425137477},
    {0.75, 1.0, 0.0, 1.0, 0.9803333619721421161},
    {0.75, 5.0, 0.0, 1.0, 2.1132036747315813877},
    {0.75, 5.0, 4.0, 5.0, 0.88813185717669932516},
    {0.75, 5.0, 2.0, 3.0, 1.4456636750402111409},
    {0.75, 2.0, 0.0, 2.0, 2.3316388182636187775},
    {0.9, 1.0, 0.0, 1.0, 1.063708749152012216},
    {0.9, 5.0, 0.0, 1.0, 3.881149584661086311},
    {0.9, 5.0, 4.0, 5.0, 0.81722383884109144355},
    {0.9, 5.0, 2.0, 3.0, 1.7894004682094647107},
    {0.9, 2.0, 0.0, 2.0, 2.8071442185288405946},
};

// E[B_H(1)^2] and the fluctuation-dissipation scale at kbt = gamma = 1.
struct FbmRow { double h, msd1, epsilon; };
inline constexpr FbmRow kFbm[] = {
    {0.1, 3.5244806624998797384, 0.78615137775742328607},
    {0.25, 1.5957691216057307118, 1.1892071150027210667},
    {0.5, 1.0, 1.4142135623730950488},
    {0.73, 1.0310550061676369249, 1.2248355560077928612},
    {0.75, 1.0638460810704871412, 1.1892071150027210667},
    {0.9, 1.9302629045847691774, 0.78615137775742328607},
};

// b_C^2 at a = kbt = 1.
struct ColoredRow { double alpha, bc2; };
inline constexpr ColoredRow kColored[] = {
    {0.2, 0.6180339887498948482},
    {0.5, 1.4142135623730950488},
    {0.8, 1.9021130325903071442},
    {0.999999, 1.9999999999975325989},
};

}  // namespace oracle
