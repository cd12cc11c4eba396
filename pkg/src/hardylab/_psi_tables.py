"""Taylor tables for the Riemann-Siegel remainder function
Psi(p) = cos(2pi(p^2 - p - 1/16))/cos(2pi p).

Generated by scripts/gen_psi_tables.py (60-digit arithmetic, order 36,
centers (k+0.5)/20 for k = 0..19).  Do not edit by hand."""

PSI_ORDER = 36
PSI_PIECES = 20

PSI_TAYLOR = (
    (
        0.865339193178996,
        -2.2762743891926607,
        2.702705747776001,
        3.176428127673476,
        -14.923517772986953,
        25.177284805514034,
        -18.417591902097975,
        -9.82681454702661,
        45.42927288356394,
        -60.278309699718974,
        37.2631115243476,
        12.438944389621142,
        -56.0320594897981,
        64.56048337970127,
        -35.57066208690319,
        -7.951184717960685,
        37.31069457972167,
        -38.92261087233656,
        19.70304421825003,
        3.011293041520657,
        -15.53966576972643,
        15.024773496207926,
        -7.120526652321273,
        -0.7388076284125791,
        4.429078250859564,
        -4.030410792551614,
        1.81044190614123,
        0.12257135640824436,
        -0.9180690647703511,
        0.7948918315221416,
        -0.34137763649881536,
        -0.013685861638807587,
        0.14461830941084897,
        -0.1201068191554931,
        0.04963313526054724,
        0.0009071087559080525,
        -0.017898034052637273,
    ),
    (
        0.7585935937286471,
        -1.988890916507053,
        2.9850159151076747,
        0.7736825460231135,
        -9.345222253427561,
        19.409627911285554,
        -19.259873071959092,
        3.4922152126486155,
        22.603611007249373,
        -41.21135337326688,
        36.941388845335254,
        -10.233399123884665,
        -22.25738663331302,
        39.659811572324884,
        -33.26963682910402,
        10.682839003606253,
        11.744284880861104,
        -21.613649665321613,
        17.35490116727201,
        -6.0033499723543455,
        -3.8055816300674157,
        7.563858119135814,
        -5.905091919568499,
        2.1322797216134197,
        0.8157346697031118,
        -1.8422723682299833,
        1.4138883099425426,
        -0.5246217974315003,
        -0.11978906003948969,
        0.33010355628892735,
        -0.25113881840219776,
        0.09494174629893438,
        0.011916906919773382,
        -0.04531098348419832,
        0.03440567761627684,
        -0.013187531181653521,
        -0.0006973959950733554,
    ),
    (
        0.6666556584777465,
        -1.688688368963032,
        2.9833780963788428,
        -0.6571621054072253,
        -5.191397493998308,
        13.94360198199289,
        -16.841328023968106,
        9.353120639531006,
        7.948933850458886,
        -24.602492533444437,
        28.861440443966007,
        -17.264534189065685,
        -3.3431862379736876,
        19.719654793325,
        -23.262972385945332,
        14.341625557056894,
        -0.7898212709457005,
        -8.865111597295911,
        10.855112058624842,
        -6.850210769857014,
        1.2266132249272164,
        2.504225862244558,
        -3.301247932597384,
        2.1298274822067578,
        -0.5353482455300218,
        -0.47470670214302446,
        0.7052888809958034,
        -0.4659551488740854,
        0.1390646801977891,
        0.06222435090931107,
        -0.11145785918118808,
        0.07568096062469873,
        -0.025113145407927903,
        -0.0055469581545327055,
        0.013528069974690667,
        -0.009490029779569758,
        0.0033897204621234083,
    ),
    (
        0.5895691955752101,
        -1.3974697492166992,
        2.8228476605645585,
        -1.3867994704469546,
        -2.2935277498806323,
        9.420657528532937,
        -13.234272949098376,
        10.715425849538201,
        -0.23478895714495998,
        -12.562908021047527,
        19.387002141750393,
        -16.36376875619795,
        4.974702263688864,
        7.039346525319881,
        -13.31358960745864,
        11.644571331242261,
        -4.953207336497268,
        -1.779478477662623,
        5.216582348335028,
        -4.834596905659312,
        2.3798665311397573,
        0.05947366223884664,
        -1.302797716942155,
        1.3140664989347726,
        -0.7068333033876341,
        0.09531627954343128,
        0.2206486036266161,
        -0.25141621699658656,
        0.14478567180377155,
        -0.03301427608974198,
        -0.026013966699327512,
        0.03559039825390529,
        -0.02181511547969218,
        0.00631785481728153,
        0.002089042820263161,
        -0.0038634626564482146,
        0.0025249718351588613,
    ),
    (
        0.5265678882930396,
        -1.1264619953005388,
        2.5910298288565263,
        -1.640749148427827,
        -0.3883065003075099,
        6.00281067183859,
        -9.609056934271646,
        9.74929040184306,
        -4.026909645338994,
        -4.958627940137864,
        11.386407675293452,
        -12.519689435991516,
        7.125271552649116,
        0.4154008270114749,
        -6.13374715895436,
        7.5033867680600235,
        -4.9848552978648835,
        1.181176645905749,
        1.716855547912323,
        -2.6106011776455036,
        1.9361258404148611,
        -0.7102489695732295,
        -0.23685134178753844,
        0.5856574733143036,
        -0.4832088701771702,
        0.2151278798879438,
        0.00012715358247476937,
        -0.08968660733838778,
        0.08421415001748875,
        -0.0424721193956311,
        0.006692744061069345,
        0.009590594720432518,
        -0.010807816533819641,
        0.006026031310046487,
        -0.0015125896681030123,
        -0.0006976402889636985,
        0.0010585575792925199,
    ),
    (
        0.4765165757284936,
        -0.879688173799961,
        2.345757620540068,
        -1.5903061560260559,
        0.7927869308999285,
        3.6006487614875144,
        -6.517514654244206,
        7.838984258501739,
        -5.213581600019084,
        -0.7923740365382547,
        5.659162788867117,
        -8.385135900185954,
        6.372595440732512,
        -2.2363514362077477,
        -1.8768091341569915,
        4.0377368629924115,
        -3.5864321629367333,
        1.8584978019908538,
        0.032758996055744935,
        -1.066367028781113,
        1.1546610335935132,
        -0.7059415885731912,
        0.16328494180674058,
        0.15964081537223682,
        -0.23770898570013269,
        0.16515722173617053,
        -0.05924502366089458,
        -0.010196056155220755,
        0.03328018270284812,
        -0.0265868555819392,
        0.01178442151387816,
        -0.0010040897475159182,
        -0.0032467677067085747,
        0.00312627933671038,
        -0.0016011412767268044,
        0.000344105797265496,
        0.00021455046384162473,
    ),
    (
        0.4382037570247486,
        -0.6565421898895416,
        2.1230424442465945,
        -1.3564033581323256,
        1.480542263464933,
        2.020210926287694,
        -4.14083493313138,
        5.751344215591668,
        -5.087691225416129,
        1.0486151411830429,
        2.0104934726494066,
        -5.053153110508286,
        4.684410229176571,
        -2.7139168694170457,
        0.23092519550989954,
        1.7830091008036735,
        -2.092652232233651,
        1.5717794332798747,
        -0.5404861859486599,
        -0.24478913568304236,
        0.5297985390118045,
        -0.4736763305075026,
        0.22470857029388253,
        -0.021271997210107207,
        -0.07974866132613898,
        0.08937948022350277,
        -0.05177495857175718,
        0.015037076046145896,
        0.006451139043939838,
        -0.011420400150185021,
        0.007909608791699026,
        -0.0031406395396916115,
        -5.054653877120509e-06,
        0.0010155648448086382,
        -0.000865819933874668,
        0.00041178569982002004,
        -7.244843593737722e-05,
    ),
    (
        0.4105245275223574,
        -0.45361473433523286,
        1.94396268470582,
        -1.0189711135046458,
        1.8532966212844721,
        1.0452425758489912,
        -2.4710191249664386,
        3.8314660100657565,
        -4.480435468970717,
        1.4760134359296602,
        -0.0899565311664096,
        -2.7485688995116235,
        3.0533798359826925,
        -2.208857172022149,
        1.0630418905887848,
        0.5844273253325443,
        -0.9797390024888085,
        1.0402699154522277,
        -0.5902177012399895,
        0.07757128893953619,
        0.15351093541463018,
        -0.2540517775108224,
        0.1664831672842306,
        -0.06498827667202016,
        -0.004124816104979693,
        0.036530087125896366,
        -0.02940408009616472,
        0.015887446326133828,
        -0.003213331161813153,
        -0.0030157713394484836,
        0.003516207281878361,
        -0.002331193368248338,
        0.0007608637615739151,
        7.570197617342202e-05,
        -0.0002920878374643274,
        0.00023697621548725346,
        -9.873694154897279e-05,
    ),
    (
        0.3925882000818635,
        -0.2659056786574108,
        1.820014587059767,
        -0.6275966347238688,
        2.0368036916433265,
        0.4748629734175338,
        -1.4286120041470667,
        2.1658142240958282,
        -3.874428374596914,
        1.127907007485174,
        -1.1697370692598403,
        -1.2950644294732638,
        1.883403572440344,
        -1.365963381342692,
        1.2849294545913053,
        0.09655414704608674,
        -0.308657394207764,
        0.5558757022732185,
        -0.4789119697065627,
        0.12618887211602803,
        -0.03124880138217216,
        -0.1107151420743625,
        0.09703441696067487,
        -0.05047031941269151,
        0.022960849583072086,
        0.01061427022307184,
        -0.01188074943206353,
        0.009701970192848474,
        -0.004900550104173921,
        1.9618485179599094e-05,
        0.0008344783103562822,
        -0.001165772640691059,
        0.0006362330646669792,
        -0.00014841094259592302,
        -1.3284400275489866e-05,
        9.432780429388667e-05,
        -5.767440345689218e-05,
    ),
    (
        0.3837773606757717,
        -0.0875804190024781,
        1.756899341199387,
        -0.2115285195637486,
        2.1097671335495467,
        0.13365148327519033,
        -0.9316407313305216,
        0.6977703595709663,
        -3.5198382930438576,
        0.41146572287724026,
        -1.6119956284626757,
        -0.37242250063156407,
        1.2907701309656712,
        -0.4557361402931591,
        1.3032687819731212,
        -0.007399374488929936,
        -0.005608390479562068,
        0.1709317977040691,
        -0.3883249013848875,
        0.053029548724788794,
        -0.10097067501099581,
        -0.029455336505226387,
        0.05699411880879514,
        -0.017903017001386936,
        0.02950206948196946,
        0.001704254905389989,
        -0.003315602034748271,
        0.0030928448903543722,
        -0.004487487009874514,
        0.0002735274104497989,
        -0.00028061984324954557,
        -0.00032879026982983504,
        0.0004315284212546763,
        -7.363928821255936e-05,
        8.037437163482328e-05,
        2.1955315813350053e-05,
        -2.712357639304238e-05,
    ),
    (
        0.3837773606757717,
        0.0875804190024781,
        1.756899341199387,
        0.2115285195637486,
        2.1097671335495467,
        -0.13365148327519033,
        -0.9316407313305216,
        -0.6977703595709663,
        -3.5198382930438576,
        -0.41146572287724026,
        -1.6119956284626757,
        0.37242250063156407,
        1.2907701309656712,
        0.4557361402931591,
        1.3032687819731212,
        0.007399374488929936,
        -0.005608390479562068,
        -0.1709317977040691,
        -0.3883249013848875,
        -0.053029548724788794,
        -0.10097067501099581,
        0.029455336505226387,
        0.05699411880879514,
        0.017903017001386936,
        0.02950206948196946,
        -0.001704254905389989,
        -0.003315602034748271,
        -0.0030928448903543722,
        -0.004487487009874514,
        -0.0002735274104497989,
        -0.00028061984324954557,
        0.00032879026982983504,
        0.0004315284212546763,
        7.363928821255936e-05,
        8.037437163482328e-05,
        -2.1955315813350053e-05,
        -2.712357639304238e-05,
    ),
    (
        0.3925882000818635,
        0.2659056786574108,
        1.820014587059767,
        0.6275966347238688,
        2.0368036916433265,
        -0.4748629734175338,
        -1.4286120041470667,
        -2.1658142240958282,
        -3.874428374596914,
        -1.127907007485174,
        -1.1697370692598403,
        1.2950644294732638,
        1.883403572440344,
        1.365963381342692,
        1.2849294545913053,
        -0.09655414704608674,
        -0.308657394207764,
        -0.5558757022732185,
        -0.4789119697065627,
        -0.12618887211602803,
        -0.03124880138217216,
        0.1107151420743625,
        0.09703441696067487,
        0.05047031941269151,
        0.022960849583072086,
        -0.01061427022307184,
        -0.01188074943206353,
        -0.009701970192848474,
        -0.004900550104173921,
        -1.9618485179599094e-05,
        0.0008344783103562822,
        0.001165772640691059,
        0.0006362330646669792,
        0.00014841094259592302,
        -1.3284400275489866e-05,
        -9.432780429388667e-05,
        -5.767440345689218e-05,
    ),
    (
        0.4105245275223574,
        0.45361473433523286,
        1.94396268470582,
        1.0189711135046458,
        1.8532966212844721,
        -1.0452425758489912,
        -2.4710191249664386,
        -3.8314660100657565,
        -4.480435468970717,
        -1.4760134359296602,
        -0.0899565311664096,
        2.7485688995116235,
        3.0533798359826925,
        2.208857172022149,
        1.0630418905887848,
        -0.5844273253325443,
        -0.9797390024888085,
        -1.0402699154522277,
        -0.5902177012399895,
        -0.07757128893953619,
        0.15351093541463018,
        0.2540517775108224,
        0.1664831672842306,
        0.06498827667202016,
        -0.004124816104979693,
        -0.036530087125896366,
        -0.02940408009616472,
        -0.015887446326133828,
        -0.003213331161813153,
        0.0030157713394484836,
        0.003516207281878361,
        0.002331193368248338,
        0.0007608637615739151,
        -7.570197617342202e-05,
        -0.0002920878374643274,
        -0.00023697621548725346,
        -9.873694154897279e-05,
    ),
    (
        0.4382037570247486,
        0.6565421898895416,
        2.1230424442465945,
        1.3564033581323256,
        1.480542263464933,
        -2.020210926287694,
        -4.14083493313138,
        -5.751344215591668,
        -5.087691225416129,
        -1.0486151411830429,
        2.0104934726494066,
        5.053153110508286,
        4.684410229176571,
        2.7139168694170457,
        0.23092519550989954,
        -1.7830091008036735,
        -2.092652232233651,
        -1.5717794332798747,
        -0.5404861859486599,
        0.24478913568304236,
        0.5297985390118045,
        0.4736763305075026,
        0.22470857029388253,
        0.021271997210107207,
        -0.07974866132613898,
        -0.08937948022350277,
        -0.05177495857175718,
        -0.015037076046145896,
        0.006451139043939838,
        0.011420400150185021,
        0.007909608791699026,
        0.0031406395396916115,
        -5.054653877120509e-06,
        -0.0010155648448086382,
        -0.000865819933874668,
        -0.00041178569982002004,
        -7.244843593737722e-05,
    ),
    (
        0.4765165757284936,
        0.879688173799961,
        2.345757620540068,
        1.5903061560260559,
        0.7927869308999285,
        -3.6006487614875144,
        -6.517514654244206,
        -7.838984258501739,
        -5.213581600019084,
        0.7923740365382547,
        5.659162788867117,
        8.385135900185954,
        6.372595440732512,
        2.2363514362077477,
        -1.8768091341569915,
        -4.0377368629924115,
        -3.5864321629367333,
        -1.8584978019908538,
        0.032758996055744935,
        1.066367028781113,
        1.1546610335935132,
        0.7059415885731912,
        0.16328494180674058,
        -0.15964081537223682,
        -0.23770898570013269,
        -0.16515722173617053,
        -0.05924502366089458,
        0.010196056155220755,
        0.03328018270284812,
        0.0265868555819392,
        0.01178442151387816,
        0.0010040897475159182,
        -0.0032467677067085747,
        -0.00312627933671038,
        -0.0016011412767268044,
        -0.000344105797265496,
        0.00021455046384162473,
    ),
    (
        0.5265678882930396,
        1.1264619953005388,
        2.5910298288565263,
        1.640749148427827,
        -0.3883065003075099,
        -6.00281067183859,
        -9.609056934271646,
        -9.74929040184306,
        -4.026909645338994,
        4.958627940137864,
        11.386407675293452,
        12.519689435991516,
        7.125271552649116,
        -0.4154008270114749,
        -6.13374715895436,
        -7.5033867680600235,
        -4.9848552978648835,
        -1.181176645905749,
        1.716855547912323,
        2.6106011776455036,
        1.9361258404148611,
        0.7102489695732295,
        -0.23685134178753844,
        -0.5856574733143036,
        -0.4832088701771702,
        -0.2151278798879438,
        0.00012715358247476937,
        0.08968660733838778,
        0.08421415001748875,
        0.0424721193956311,
        0.006692744061069345,
        -0.009590594720432518,
        -0.010807816533819641,
        -0.006026031310046487,
        -0.0015125896681030123,
        0.0006976402889636985,
        0.0010585575792925199,
    ),
    (
        0.5895691955752101,
        1.3974697492166992,
        2.8228476605645585,
        1.3867994704469546,
        -2.2935277498806323,
        -9.420657528532937,
        -13.234272949098376,
        -10.715425849538201,
        -0.23478895714495998,
        12.562908021047527,
        19.387002141750393,
        16.36376875619795,
        4.974702263688864,
        -7.039346525319881,
        -13.31358960745864,
        -11.644571331242261,
        -4.953207336497268,
        1.779478477662623,
        5.216582348335028,
        4.834596905659312,
        2.3798665311397573,
        -0.05947366223884664,
        -1.302797716942155,
        -1.3140664989347726,
        -0.7068333033876341,
        -0.09531627954343128,
        0.2206486036266161,
        0.25141621699658656,
        0.14478567180377155,
        0.03301427608974198,
        -0.026013966699327512,
        -0.03559039825390529,
        -0.02181511547969218,
        -0.00631785481728153,
        0.002089042820263161,
        0.0038634626564482146,
        0.0025249718351588613,
    ),
    (
        0.6666556584777465,
        1.688688368963032,
        2.9833780963788428,
        0.6571621054072253,
        -5.191397493998308,
        -13.94360198199289,
        -16.841328023968106,
        -9.353120639531006,
        7.948933850458886,
        24.602492533444437,
        28.861440443966007,
        17.264534189065685,
        -3.3431862379736876,
        -19.719654793325,
        -23.262972385945332,
        -14.341625557056894,
        -0.7898212709457005,
        8.865111597295911,
        10.855112058624842,
        6.850210769857014,
        1.2266132249272164,
        -2.504225862244558,
        -3.301247932597384,
        -2.1298274822067578,
        -0.5353482455300218,
        0.47470670214302446,
        0.7052888809958034,
        0.4659551488740854,
        0.1390646801977891,
        -0.06222435090931107,
        -0.11145785918118808,
        -0.07568096062469873,
        -0.025113145407927903,
        0.0055469581545327055,
        0.013528069974690667,
        0.009490029779569758,
        0.0033897204621234083,
    ),
    (
        0.7585935937286471,
        1.988890916507053,
        2.9850159151076747,
        -0.7736825460231135,
        -9.345222253427561,
        -19.409627911285554,
        -19.259873071959092,
        -3.4922152126486155,
        22.603611007249373,
        41.21135337326688,
        36.941388845335254,
        10.233399123884665,
        -22.25738663331302,
        -39.659811572324884,
        -33.26963682910402,
        -10.682839003606253,
        11.744284880861104,
        21.613649665321613,
        17.35490116727201,
        6.0033499723543455,
        -3.8055816300674157,
        -7.563858119135814,
        -5.905091919568499,
        -2.1322797216134197,
        0.8157346697031118,
        1.8422723682299833,
        1.4138883099425426,
        0.5246217974315003,
        -0.11978906003948969,
        -0.33010355628892735,
        -0.25113881840219776,
        -0.09494174629893438,
        0.011916906919773382,
        0.04531098348419832,
        0.03440567761627684,
        0.013187531181653521,
        -0.0006973959950733554,
    ),
    (
        0.865339193178996,
        2.2762743891926607,
        2.702705747776001,
        -3.176428127673476,
        -14.923517772986953,
        -25.177284805514034,
        -18.417591902097975,
        9.82681454702661,
        45.42927288356394,
        60.278309699718974,
        37.2631115243476,
        -12.438944389621142,
        -56.0320594897981,
        -64.56048337970127,
        -35.57066208690319,
        7.951184717960685,
        37.31069457972167,
        38.92261087233656,
        19.70304421825003,
        -3.011293041520657,
        -15.53966576972643,
        -15.024773496207926,
        -7.120526652321273,
        0.7388076284125791,
        4.429078250859564,
        4.030410792551614,
        1.81044190614123,
        -0.12257135640824436,
        -0.9180690647703511,
        -0.7948918315221416,
        -0.34137763649881536,
        0.013685861638807587,
        0.14461830941084897,
        0.1201068191554931,
        0.04963313526054724,
        -0.0009071087559080525,
        -0.017898034052637273,
    ),
)
