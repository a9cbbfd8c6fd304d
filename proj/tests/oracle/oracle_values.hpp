// Generated by tools/gen/gen_oracles.py (Arb / mpmath); do not edit.
#pragma once

#include <array>

namespace zl::oracle {

inline constexpr double kEulerGamma = 5.7721566490153286061e-1;

struct ThetaValue { double t; double theta; };
inline constexpr std::array<ThetaValue, 10> kTheta = {{
    {10, -3.0670743962898952917},
    {14.134725, -1.7286703041172767029},
    {50, 26.461366070161409647},
    {99.5, 87.280969043090791617},
    {100, 87.972165231787219625},
    {150, 162.56430688406852209},
    {200, 245.65143509898897282},
    {10000.0, 31861.923830835820873},
    {1000000.0, 5488816.3530784034449},
    {10000000.0, 66401092.530045791907},
}};

struct ZValue { double t; double z; };
inline constexpr std::array<ZValue, 100> kZLogSweep = {{
    {10.0, -1.5491945461810223891},
    {11.233240329780275, -1.4638697815785481242},
    {12.618568830660204, -0.99736829258301367747},
    {14.174741629268052, 0.031842508821052061236},
    {15.922827933410924, 1.4782635882605776542},
    {17.88649529057435, 2.3405468857255178666},
    {20.092330025650472, 1.0507166517106264285},
    {22.5701971963392, -1.3415391037482001620},
    {25.35364493970112, 0.48694857536381489737},
    {28.480358684358016, 2.5463613966376333055},
    {31.99267137797383, -0.86961423640605516829},
    {35.938136638046274, 2.7134357513336340236},
    {40.37017258596555, -0.82495786788434655749},
    {45.348785081285826, -3.5793710382950140264},
    {50.94138014816379, -1.7334705059457309393},
    {57.22367659350218, -1.4754359564913837341},
    {64.28073117284322, -2.2315956298078050736},
    {72.20809018385464, -0.42641827461049219704},
    {81.11308307896871, 3.9980818321475721124},
    {91.11627561154891, 4.1584574762007672368},
    {102.35310218990261, -2.1111222435246735329},
    {114.97569953977359, -1.3849040255897810052},
    {129.15496650148836, -1.0409774349685109550},
    {145.08287784959396, -3.3438500499920634356},
    {162.97508346206442, 0.22618971692904855667},
    {183.07382802953686, -3.3155821023925400496},
    {205.6512308348652, 0.82902530396404791144},
    {231.01297000831593, -0.42627431686873698071},
    {259.50242113997353, 0.61034876663378060538},
    {291.50530628251767, -1.8514354570433313198},
    {327.4549162877729, 0.059577887332938622935},
    {367.8379771828634, -0.40036598463196916351},
    {413.2012400115338, -0.19379855002426587466},
    {464.1588833612778, 0.56832509645410388874},
    {521.4008287999685, -0.34331032911351612847},
    {585.7020818056667, -0.69678443179802668212},
    {657.933224657568, 0.84624047259493135788},
    {739.0722033525781, -1.3218186135938886466},
    {830.2175681319743, -1.8859618738548271007},
    {932.6033468832197, 6.3312584884623613211},
    {1047.6157527896648, 0.80384151887486163020},
    {1176.8119524349984, -0.36540812828872586291},
    {1321.9411484660293, -0.82666054319798598990},
    {1484.9682622544653, 0.67218694501033984481},
    {1668.1005372000584, 1.9040568664628066540},
    {1873.8174228603837, -2.4645357592680051729},
    {2104.90414451202, 3.8661698839657357571},
    {2364.4894126454074, -1.1003230669395283208},
    {2656.087782946687, -0.72246034874138522161},
    {2983.6472402833397, -1.3055063416888568844},
    {3351.6026509388435, 3.3173695066133608631},
    {3764.9358067924677, -1.1248246545325681821},
    {4229.242874389501, 0.39762806106034777771},
    {4750.810162102797, -3.5288296073248499229},
    {5336.699231206308, -2.7134584543902501092},
    {5994.842503189412, -0.62064527774931089773},
    {6734.15065775082, 2.8733473620869015973},
    {7564.633275546293, 1.3538874838845841424},
    {8497.534359086443, 0.38436308531158060795},
    {9545.484566618336, 12.858020676079549254},
    {10722.672220103233, 0.86933917523539298601},
    {12045.035402587819, -1.8948967345934583786},
    {13530.477745798074, 0.89710434863823508497},
    {15199.110829529336, 0.024881578707435061498},
    {17073.52647470692, 0.10875330446545603680},
    {19179.10261672489, -0.25523381583429684588},
    {21544.34690031883, 2.2675730660453363454},
    {24201.282647943826, -1.2407333941282704810},
    {27185.8824273294, -0.047570236731118245871},
    {30538.55508833417, -0.77529607860429791204},
    {34304.69286314918, 3.4199931360873716873},
    {38535.28593710528, 3.0772082808659331109},
    {43287.6128108306, -1.9629403105041381601},
    {48626.01580065352, 0.20555976526632591061},
    {54622.772176843435, 0.056606615134577330677},
    {61359.072734131725, -9.9958888791304324761},
    {68926.12104349694, 0.48273445826939300154},
    {77426.36826811272, 1.9000676113300340048},
    {86974.9002617783, -1.3938719844209432549},
    {97700.99572992256, -6.9500661403940491705},
    {109749.8765493056, 0.15751196318292467793},
    {123284.67394420668, -0.078456259432078904137},
    {138488.6371393873, -0.84425678093721760998},
    {155567.6143930471, 0.49893415151796100207},
    {174752.84000076845, 0.61422758098181889297},
    {196304.06500402704, 0.39990856463894154894},
    {220513.0739903047, 0.41828883607387442866},
    {247707.63559917107, 0.34734029363069776942},
    {278255.9402207123, 1.6102015478478170009},
    {312571.5849688237, -1.5459728093788980439},
    {351119.17342151306, -0.30364174416067945455},
    {394420.6059437657, -0.62765003782351031749},
    {443062.145758388, -1.1412305880909009756},
    {497702.35643321136, -2.5596042717538677905},
    {559081.0182512224, -1.5891335325074454701},
    {628029.144183425, -0.46688826278463873849},
    {705480.2310718645, 3.8182816241625773405},
    {792482.8983539171, -4.7834517038807501647},
    {890215.085445039, -0.092800676480260259375},
    {1000000.0, -2.8061338784306984787},
}};
inline constexpr std::array<ZValue, 7> kZExtra = {{
    {100000.0, 5.8795924686817650415},
    {7005.06, -0.0012754713068636887768},
    {7005.1, 0.00023742473587904892568},
    {190.0, -2.8138407052298429154},
    {200.0, 5.5897836231501089614},
    {230.0, -1.6642019319657168158},
    {260.0, -0.20989639276385883747},
}};

struct ZetaSqValue { double t; double abs_zeta_sq; };
inline constexpr std::array<ZetaSqValue, 6> kAbsZetaSq = {{
    {0.0, 2.1326352914004895683},
    {1.0, 0.54214573464825501542},
    {5.0, 0.54591916564267731888},
    {9.9, 2.3884894063422820703},
    {12.0, 1.5873198743515219692},
    {30.0, 0.35524999574728991036},
}};

struct ZeroValue { int n; double gamma; };
inline constexpr std::array<ZeroValue, 20> kZetaZeros = {{
    {1, 14.134725141734693790},
    {35, 111.87465917699263709},
    {69, 179.91648402025699614},
    {103, 241.04915779621658641},
    {137, 297.97927706194341521},
    {172, 353.48890048871880678},
    {206, 405.13438745990992726},
    {240, 456.32842668924605122},
    {274, 505.41523174224444203},
    {308, 553.76497211915881462},
    {342, 601.60213673593263605},
    {376, 647.76175300428888379},
    {410, 693.17697006060182485},
    {444, 738.58042117137382252},
    {478, 782.59794394607353987},
    {513, 828.34017430048990037},
    {547, 872.18875082161320776},
    {581, 914.73009695837561334},
    {615, 957.51005259642372247},
    {649, 999.79157155741294046},
}};

struct LiValue { double x; double li; };
inline constexpr std::array<LiValue, 7> kLi = {{
    {2.0, 1.0451637801174927848},
    {10.0, 6.1655995047872979375},
    {1000.0, 1.7760965799015222669e+2},
    {10000.0, 1.2461372158993884597e+3},
    {1000000.0, 7.862754915946218192e+4},
    {10000000.0, 6.6491840504856891233e+5},
    {100000000.0, 5.7622093754480314676e+6},
}};

// max |GL20 - GL28| over sampled unit intervals: 7.159e-24
struct HLValue { double t; double j; };
inline constexpr std::array<HLValue, 9> kHardyLittlewood = {{
    {10.0, 9.9827346379189925319},
    {50.0, 115.91173533959898870},
    {100.0, 295.63509905471913037},
    {200.0, 736.83271056146788622},
    {500.0, 2276.4210680433823730},
    {1000.0, 5212.5077633377824612},
    {2000.0, 11830.067243118236571},
    {5000.0, 34129.420109265026530},
    {10000.0, 75272.114989779725073},
}};

}  // namespace zl::oracle
