// Generated by tools/gen_lebedev_tables.py. Do not edit.
#include "lebedev_tables.hpp"

namespace scatcm::detail {

constexpr LebedevPoint kLebedev6[] = {
    {0, 0, 2.0943951023931962},
    {1.5707963267948966, 0, 2.0943951023931962},
    {1.5707963267948966, 1.5707963267948966, 2.0943951023931962},
    {1.5707963267948966, 3.1415926535897931, 2.0943951023931962},
    {1.5707963267948966, 4.7123889803846897, 2.0943951023931962},
    {3.1415926535897931, 0, 2.0943951023931962},
};

constexpr LebedevPoint kLebedev14[] = {
    {0.9553166181245093, 0.78539816339744828, 0.94247779607693793},
    {0.9553166181245093, 2.3561944901923448, 0.94247779607693793},
    {0.9553166181245093, 3.9269908169872414, 0.94247779607693793},
    {0.9553166181245093, 5.497787143782138, 0.94247779607693793},
    {2.1862760354652839, 0.78539816339744828, 0.94247779607693793},
    {2.1862760354652839, 2.3561944901923448, 0.94247779607693793},
    {2.1862760354652839, 3.9269908169872414, 0.94247779607693793},
    {2.1862760354652839, 5.497787143782138, 0.94247779607693793},
    {0, 0, 0.83775804095727813},
    {1.5707963267948966, 0, 0.83775804095727813},
    {1.5707963267948966, 1.5707963267948966, 0.83775804095727813},
    {1.5707963267948966, 3.1415926535897931, 0.83775804095727813},
    {1.5707963267948966, 4.7123889803846897, 0.83775804095727813},
    {3.1415926535897931, 0, 0.83775804095727813},
};

constexpr LebedevPoint kLebedev26[] = {
    {0, 0, 0.59839860068377015},
    {1.5707963267948966, 0, 0.59839860068377015},
    {1.5707963267948966, 1.5707963267948966, 0.59839860068377015},
    {1.5707963267948966, 3.1415926535897931, 0.59839860068377015},
    {1.5707963267948966, 4.7123889803846897, 0.59839860068377015},
    {3.1415926535897931, 0, 0.59839860068377015},
    {0.78539816339744828, 0, 0.47871888054701611},
    {0.78539816339744828, 1.5707963267948966, 0.47871888054701611},
    {0.78539816339744828, 3.1415926535897931, 0.47871888054701611},
    {0.78539816339744828, 4.7123889803846897, 0.47871888054701611},
    {1.5707963267948966, 0.78539816339744828, 0.47871888054701611},
    {1.5707963267948966, 2.3561944901923448, 0.47871888054701611},
    {1.5707963267948966, 3.9269908169872414, 0.47871888054701611},
    {1.5707963267948966, 5.497787143782138, 0.47871888054701611},
    {2.3561944901923448, 0, 0.47871888054701611},
    {2.3561944901923448, 1.5707963267948966, 0.47871888054701611},
    {2.3561944901923448, 3.1415926535897931, 0.47871888054701611},
    {2.3561944901923448, 4.7123889803846897, 0.47871888054701611},
    {0.9553166181245093, 0.78539816339744828, 0.40391905546154477},
    {0.9553166181245093, 2.3561944901923448, 0.40391905546154477},
    {0.9553166181245093, 3.9269908169872414, 0.40391905546154477},
    {0.9553166181245093, 5.497787143782138, 0.40391905546154477},
    {2.1862760354652839, 0.78539816339744828, 0.40391905546154477},
    {2.1862760354652839, 2.3561944901923448, 0.40391905546154477},
    {2.1862760354652839, 3.9269908169872414, 0.40391905546154477},
    {2.1862760354652839, 5.497787143782138, 0.40391905546154477},
};

constexpr LebedevPoint kLebedev38[] = {
    {0.9553166181245093, 0.78539816339744828, 0.40391905546154477},
    {0.9553166181245093, 2.3561944901923448, 0.40391905546154477},
    {0.9553166181245093, 3.9269908169872414, 0.40391905546154477},
    {0.9553166181245093, 5.497787143782138, 0.40391905546154477},
    {2.1862760354652839, 0.78539816339744828, 0.40391905546154477},
    {2.1862760354652839, 2.3561944901923448, 0.40391905546154477},
    {2.1862760354652839, 3.9269908169872414, 0.40391905546154477},
    {2.1862760354652839, 5.497787143782138, 0.40391905546154477},
    {0.47765830906225465, 0, 0.35903916041026207},
    {0.47765830906225465, 1.5707963267948966, 0.35903916041026207},
    {0.47765830906225465, 3.1415926535897931, 0.35903916041026207},
    {0.47765830906225465, 4.7123889803846897, 0.35903916041026207},
    {1.093138017732642, 0, 0.35903916041026207},
    {1.093138017732642, 1.5707963267948966, 0.35903916041026207},
    {1.093138017732642, 3.1415926535897931, 0.35903916041026207},
    {1.093138017732642, 4.7123889803846897, 0.35903916041026207},
    {1.5707963267948966, 0.4776583090622547, 0.35903916041026207},
    {1.5707963267948966, 1.093138017732642, 0.35903916041026207},
    {1.5707963267948966, 2.0484546358571514, 0.35903916041026207},
    {1.5707963267948966, 2.6639343445275387, 0.35903916041026207},
    {1.5707963267948966, 3.6192509626520475, 0.35903916041026207},
    {1.5707963267948966, 4.2347306713224349, 0.35903916041026207},
    {1.5707963267948966, 5.1900472894469445, 0.35903916041026207},
    {1.5707963267948966, 5.8055269981173314, 0.35903916041026207},
    {2.0484546358571514, 0, 0.35903916041026207},
    {2.0484546358571514, 1.5707963267948966, 0.35903916041026207},
    {2.0484546358571514, 3.1415926535897931, 0.35903916041026207},
    {2.0484546358571514, 4.7123889803846897, 0.35903916041026207},
    {2.6639343445275387, 0, 0.35903916041026207},
    {2.6639343445275387, 1.5707963267948966, 0.35903916041026207},
    {2.6639343445275387, 3.1415926535897931, 0.35903916041026207},
    {2.6639343445275387, 4.7123889803846897, 0.35903916041026207},
    {0, 0, 0.11967972013675403},
    {1.5707963267948966, 0, 0.11967972013675403},
    {1.5707963267948966, 1.5707963267948966, 0.11967972013675403},
    {1.5707963267948966, 3.1415926535897931, 0.11967972013675403},
    {1.5707963267948966, 4.7123889803846897, 0.11967972013675403},
    {3.1415926535897931, 0, 0.11967972013675403},
};

constexpr LebedevPoint kLebedev50[] = {
    {0.78539816339744828, 0, 0.28368526254637988},
    {0.78539816339744828, 1.5707963267948966, 0.28368526254637988},
    {0.78539816339744828, 3.1415926535897931, 0.28368526254637988},
    {0.78539816339744828, 4.7123889803846897, 0.28368526254637988},
    {1.5707963267948966, 0.78539816339744828, 0.28368526254637988},
    {1.5707963267948966, 2.3561944901923448, 0.28368526254637988},
    {1.5707963267948966, 3.9269908169872414, 0.28368526254637988},
    {1.5707963267948966, 5.497787143782138, 0.28368526254637988},
    {2.3561944901923448, 0, 0.28368526254637988},
    {2.3561944901923448, 1.5707963267948966, 0.28368526254637988},
    {2.3561944901923448, 3.1415926535897931, 0.28368526254637988},
    {2.3561944901923448, 4.7123889803846897, 0.28368526254637988},
    {0.9553166181245093, 0.78539816339744828, 0.26507188014663879},
    {0.9553166181245093, 2.3561944901923448, 0.26507188014663879},
    {0.9553166181245093, 3.9269908169872414, 0.26507188014663879},
    {0.9553166181245093, 5.497787143782138, 0.26507188014663879},
    {2.1862760354652839, 0.78539816339744828, 0.26507188014663879},
    {2.1862760354652839, 2.3561944901923448, 0.26507188014663879},
    {2.1862760354652839, 3.9269908169872414, 0.26507188014663879},
    {2.1862760354652839, 5.497787143782138, 0.26507188014663879},
    {0.44051066300469843, 0.78539816339744828, 0.25350561089731127},
    {0.44051066300469843, 2.3561944901923448, 0.25350561089731127},
    {0.44051066300469843, 3.9269908169872414, 0.25350561089731127},
    {0.44051066300469843, 5.497787143782138, 0.25350561089731127},
    {1.2645189576252271, 0.32175055439664213, 0.25350561089731127},
    {1.2645189576252271, 1.2490457723982544, 0.25350561089731127},
    {1.2645189576252271, 1.8925468811915387, 0.25350561089731127},
    {1.2645189576252271, 2.819842099193151, 0.25350561089731127},
    {1.2645189576252271, 3.4633432079864352, 0.25350561089731127},
    {1.2645189576252271, 4.3906384259880475, 0.25350561089731127},
    {1.2645189576252271, 5.0341395347813318, 0.25350561089731127},
    {1.2645189576252271, 5.9614347527829441, 0.25350561089731127},
    {1.877073695964566, 0.32175055439664213, 0.25350561089731127},
    {1.877073695964566, 1.2490457723982544, 0.25350561089731127},
    {1.877073695964566, 1.8925468811915387, 0.25350561089731127},
    {1.877073695964566, 2.819842099193151, 0.25350561089731127},
    {1.877073695964566, 3.4633432079864352, 0.25350561089731127},
    {1.877073695964566, 4.3906384259880475, 0.25350561089731127},
    {1.877073695964566, 5.0341395347813318, 0.25350561089731127},
    {1.877073695964566, 5.9614347527829441, 0.25350561089731127},
    {2.7010819905850947, 0.78539816339744828, 0.25350561089731127},
    {2.7010819905850947, 2.3561944901923448, 0.25350561089731127},
    {2.7010819905850947, 3.9269908169872414, 0.25350561089731127},
    {2.7010819905850947, 5.497787143782138, 0.25350561089731127},
    {0, 0, 0.15957296018233871},
    {1.5707963267948966, 0, 0.15957296018233871},
    {1.5707963267948966, 1.5707963267948966, 0.15957296018233871},
    {1.5707963267948966, 3.1415926535897931, 0.15957296018233871},
    {1.5707963267948966, 4.7123889803846897, 0.15957296018233871},
    {3.1415926535897931, 0, 0.15957296018233871},
};

constexpr LebedevPoint kLebedev74[] = {
    {0.74689859306903661, 0.78539816339744828, 0.33396646771837279},
    {0.74689859306903661, 2.3561944901923448, 0.33396646771837279},
    {0.74689859306903661, 3.9269908169872414, 0.33396646771837279},
    {0.74689859306903661, 5.497787143782138, 0.33396646771837279},
    {1.0697033135295393, 0.57963974036370436, 0.33396646771837279},
    {1.0697033135295393, 0.99115658643119231, 0.33396646771837279},
    {1.0697033135295393, 2.1504360671586009, 0.33396646771837279},
    {1.0697033135295393, 2.5619529132260888, 0.33396646771837279},
    {1.0697033135295393, 3.7212323939534975, 0.33396646771837279},
    {1.0697033135295393, 4.1327492400209849, 0.33396646771837279},
    {1.0697033135295393, 5.2920287207483936, 0.33396646771837279},
    {1.0697033135295393, 5.7035455668158814, 0.33396646771837279},
    {2.0718893400602538, 0.57963974036370436, 0.33396646771837279},
    {2.0718893400602538, 0.99115658643119231, 0.33396646771837279},
    {2.0718893400602538, 2.1504360671586009, 0.33396646771837279},
    {2.0718893400602538, 2.5619529132260888, 0.33396646771837279},
    {2.0718893400602538, 3.7212323939534975, 0.33396646771837279},
    {2.0718893400602538, 4.1327492400209849, 0.33396646771837279},
    {2.0718893400602538, 5.2920287207483936, 0.33396646771837279},
    {2.0718893400602538, 5.7035455668158814, 0.33396646771837279},
    {2.3946940605207567, 0.78539816339744828, 0.33396646771837279},
    {2.3946940605207567, 2.3561944901923448, 0.33396646771837279},
    {2.3946940605207567, 3.9269908169872414, 0.33396646771837279},
    {2.3946940605207567, 5.497787143782138, 0.33396646771837279},
    {0.78539816339744828, 0, 0.20865289186971622},
    {0.78539816339744828, 1.5707963267948966, 0.20865289186971622},
    {0.78539816339744828, 3.1415926535897931, 0.20865289186971622},
    {0.78539816339744828, 4.7123889803846897, 0.20865289186971622},
    {1.5707963267948966, 0.78539816339744828, 0.20865289186971622},
    {1.5707963267948966, 2.3561944901923448, 0.20865289186971622},
    {1.5707963267948966, 3.9269908169872414, 0.20865289186971622},
    {1.5707963267948966, 5.497787143782138, 0.20865289186971622},
    {2.3561944901923448, 0, 0.20865289186971622},
    {2.3561944901923448, 1.5707963267948966, 0.20865289186971622},
    {2.3561944901923448, 3.1415926535897931, 0.20865289186971622},
    {2.3561944901923448, 4.7123889803846897, 0.20865289186971622},
    {0.32654513137526026, 0, 0.20762372406084659},
    {0.32654513137526026, 1.5707963267948966, 0.20762372406084659},
    {0.32654513137526026, 3.1415926535897931, 0.20762372406084659},
    {0.32654513137526026, 4.7123889803846897, 0.20762372406084659},
    {1.2442511954196362, 0, 0.20762372406084659},
    {1.2442511954196362, 1.5707963267948966, 0.20762372406084659},
    {1.2442511954196362, 3.1415926535897931, 0.20762372406084659},
    {1.2442511954196362, 4.7123889803846897, 0.20762372406084659},
    {1.5707963267948966, 0.32654513137526037, 0.20762372406084659},
    {1.5707963267948966, 1.2442511954196362, 0.20762372406084659},
    {1.5707963267948966, 1.8973414581701569, 0.20762372406084659},
    {1.5707963267948966, 2.8150475222145328, 0.20762372406084659},
    {1.5707963267948966, 3.4681377849650534, 0.20762372406084659},
    {1.5707963267948966, 4.3858438490094294, 0.20762372406084659},
    {1.5707963267948966, 5.03893411175995, 0.20762372406084659},
    {1.5707963267948966, 5.9566401758043259, 0.20762372406084659},
    {1.8973414581701569, 0, 0.20762372406084659},
    {1.8973414581701569, 1.5707963267948966, 0.20762372406084659},
    {1.8973414581701569, 3.1415926535897931, 0.20762372406084659},
    {1.8973414581701569, 4.7123889803846897, 0.20762372406084659},
    {2.8150475222145328, 0, 0.20762372406084659},
    {2.8150475222145328, 1.5707963267948966, 0.20762372406084659},
    {2.8150475222145328, 3.1415926535897931, 0.20762372406084659},
    {2.8150475222145328, 4.7123889803846897, 0.20762372406084659},
    {0, 0, 0.0064473923305995431},
    {1.5707963267948966, 0, 0.0064473923305995431},
    {1.5707963267948966, 1.5707963267948966, 0.0064473923305995431},
    {1.5707963267948966, 3.1415926535897931, 0.0064473923305995431},
    {1.5707963267948966, 4.7123889803846897, 0.0064473923305995431},
    {3.1415926535897931, 0, 0.0064473923305995431},
    {0.9553166181245093, 0.78539816339744828, -0.37178913059528557},
    {0.9553166181245093, 2.3561944901923448, -0.37178913059528557},
    {0.9553166181245093, 3.9269908169872414, -0.37178913059528557},
    {0.9553166181245093, 5.497787143782138, -0.37178913059528557},
    {2.1862760354652839, 0.78539816339744828, -0.37178913059528557},
    {2.1862760354652839, 2.3561944901923448, -0.37178913059528557},
    {2.1862760354652839, 3.9269908169872414, -0.37178913059528557},
    {2.1862760354652839, 5.497787143782138, -0.37178913059528557},
};

constexpr LebedevPoint kLebedev86[] = {
    {0.9553166181245093, 0.78539816339744828, 0.15009158815708187},
    {0.9553166181245093, 2.3561944901923448, 0.15009158815708187},
    {0.9553166181245093, 3.9269908169872414, 0.15009158815708187},
    {0.9553166181245093, 5.497787143782138, 0.15009158815708187},
    {2.1862760354652839, 0.78539816339744828, 0.15009158815708187},
    {2.1862760354652839, 2.3561944901923448, 0.15009158815708187},
    {2.1862760354652839, 3.9269908169872414, 0.15009158815708187},
    {2.1862760354652839, 5.497787143782138, 0.15009158815708187},
    {0.80327448507472843, 0.26584218892516515, 0.1492445168690702},
    {0.80327448507472843, 1.3049541378697316, 0.1492445168690702},
    {0.80327448507472843, 1.8366385157200618, 0.1492445168690702},
    {0.80327448507472843, 2.8757504646646281, 0.1492445168690702},
    {0.80327448507472843, 3.4074348425149581, 0.1492445168690702},
    {0.80327448507472843, 4.4465467914595243, 0.1492445168690702},
    {0.80327448507472843, 4.9782311693098542, 0.1492445168690702},
    {0.80327448507472843, 6.0173431182544208, 0.1492445168690702},
    {1.3805879142395583, 0.78539816339744828, 0.1492445168690702},
    {1.3805879142395583, 2.3561944901923448, 0.1492445168690702},
    {1.3805879142395583, 3.9269908169872414, 0.1492445168690702},
    {1.3805879142395583, 5.497787143782138, 0.1492445168690702},
    {1.761004739350235, 0.78539816339744828, 0.1492445168690702},
    {1.761004739350235, 2.3561944901923448, 0.1492445168690702},
    {1.761004739350235, 3.9269908169872414, 0.1492445168690702},
    {1.761004739350235, 5.497787143782138, 0.1492445168690702},
    {2.3383181685150651, 0.26584218892516515, 0.1492445168690702},
    {2.3383181685150651, 1.3049541378697316, 0.1492445168690702},
    {2.3383181685150651, 1.8366385157200618, 0.1492445168690702},
    {2.3383181685150651, 2.8757504646646281, 0.1492445168690702},
    {2.3383181685150651, 3.4074348425149581, 0.1492445168690702},
    {2.3383181685150651, 4.4465467914595243, 0.1492445168690702},
    {2.3383181685150651, 4.9782311693098542, 0.1492445168690702},
    {2.3383181685150651, 6.0173431182544208, 0.1492445168690702},
    {0.38358036051173899, 0, 0.14843778669298521},
    {0.38358036051173899, 1.5707963267948966, 0.14843778669298521},
    {0.38358036051173899, 3.1415926535897931, 0.14843778669298521},
    {0.38358036051173899, 4.7123889803846897, 0.14843778669298521},
    {1.1872159662831576, 0, 0.14843778669298521},
    {1.1872159662831576, 1.5707963267948966, 0.14843778669298521},
    {1.1872159662831576, 3.1415926535897931, 0.14843778669298521},
    {1.1872159662831576, 4.7123889803846897, 0.14843778669298521},
    {1.5707963267948966, 0.38358036051173899, 0.14843778669298521},
    {1.5707963267948966, 1.1872159662831576, 0.14843778669298521},
    {1.5707963267948966, 1.9543766873066355, 0.14843778669298521},
    {1.5707963267948966, 2.7580122930780542, 0.14843778669298521},
    {1.5707963267948966, 3.5251730141015321, 0.14843778669298521},
    {1.5707963267948966, 4.3288086198729507, 0.14843778669298521},
    {1.5707963267948966, 5.0959693408964286, 0.14843778669298521},
    {1.5707963267948966, 5.8996049466678473, 0.14843778669298521},
    {1.9543766873066355, 0, 0.14843778669298521},
    {1.9543766873066355, 1.5707963267948966, 0.14843778669298521},
    {1.9543766873066355, 3.1415926535897931, 0.14843778669298521},
    {1.9543766873066355, 4.7123889803846897, 0.14843778669298521},
    {2.7580122930780542, 0, 0.14843778669298521},
    {2.7580122930780542, 1.5707963267948966, 0.14843778669298521},
    {2.7580122930780542, 3.1415926535897931, 0.14843778669298521},
    {2.7580122930780542, 4.7123889803846897, 0.14843778669298521},
    {0, 0, 0.14506632743848968},
    {1.5707963267948966, 0, 0.14506632743848968},
    {1.5707963267948966, 1.5707963267948966, 0.14506632743848968},
    {1.5707963267948966, 3.1415926535897931, 0.14506632743848968},
    {1.5707963267948966, 4.7123889803846897, 0.14506632743848968},
    {3.1415926535897931, 0, 0.14506632743848968},
    {0.55001188148039459, 0.78539816339744828, 0.13961936079092707},
    {0.55001188148039459, 2.3561944901923448, 0.13961936079092707},
    {0.55001188148039459, 3.9269908169872414, 0.13961936079092707},
    {0.55001188148039459, 5.497787143782138, 0.13961936079092707},
    {1.1922147616227734, 0.40908384190185804, 0.13961936079092707},
    {1.1922147616227734, 1.1617124848930387, 0.13961936079092707},
    {1.1922147616227734, 1.9798801686967546, 0.13961936079092707},
    {1.1922147616227734, 2.7325088116879352, 0.13961936079092707},
    {1.1922147616227734, 3.550676495491651, 0.13961936079092707},
    {1.1922147616227734, 4.3033051384828314, 0.13961936079092707},
    {1.1922147616227734, 5.1214728222865471, 0.13961936079092707},
    {1.1922147616227734, 5.8741014652777279, 0.13961936079092707},
    {1.9493778919670199, 0.40908384190185804, 0.13961936079092707},
    {1.9493778919670199, 1.1617124848930387, 0.13961936079092707},
    {1.9493778919670199, 1.9798801686967546, 0.13961936079092707},
    {1.9493778919670199, 2.7325088116879352, 0.13961936079092707},
    {1.9493778919670199, 3.550676495491651, 0.13961936079092707},
    {1.9493778919670199, 4.3033051384828314, 0.13961936079092707},
    {1.9493778919670199, 5.1214728222865471, 0.13961936079092707},
    {1.9493778919670199, 5.8741014652777279, 0.13961936079092707},
    {2.5915807721093986, 0.78539816339744828, 0.13961936079092707},
    {2.5915807721093986, 2.3561944901923448, 0.13961936079092707},
    {2.5915807721093986, 3.9269908169872414, 0.13961936079092707},
    {2.5915807721093986, 5.497787143782138, 0.13961936079092707},
};

constexpr LebedevPoint kLebedev110[] = {
    {0.80872540092708523, 0.30314969510933226, 0.1249450968725133},
    {0.80872540092708523, 1.2676466316855644, 0.1249450968725133},
    {0.80872540092708523, 1.8739460219042288, 0.1249450968725133},
    {0.80872540092708523, 2.8384429584804609, 0.1249450968725133},
    {0.80872540092708523, 3.4447423486991253, 0.1249450968725133},
    {0.80872540092708523, 4.4092392852753575, 0.1249450968725133},
    {0.80872540092708523, 5.0155386754940219, 0.1249450968725133},
    {0.80872540092708523, 5.980035612070254, 0.1249450968725133},
    {1.353124175902743, 0.78539816339744828, 0.1249450968725133},
    {1.353124175902743, 2.3561944901923448, 0.1249450968725133},
    {1.353124175902743, 3.9269908169872414, 0.1249450968725133},
    {1.353124175902743, 5.497787143782138, 0.1249450968725133},
    {1.7884684776870501, 0.78539816339744828, 0.1249450968725133},
    {1.7884684776870501, 2.3561944901923448, 0.1249450968725133},
    {1.7884684776870501, 3.9269908169872414, 0.1249450968725133},
    {1.7884684776870501, 5.497787143782138, 0.1249450968725133},
    {2.3328672526627079, 0.30314969510933226, 0.1249450968725133},
    {2.3328672526627079, 1.2676466316855644, 0.1249450968725133},
    {2.3328672526627079, 1.8739460219042288, 0.1249450968725133},
    {2.3328672526627079, 2.8384429584804609, 0.1249450968725133},
    {2.3328672526627079, 3.4447423486991253, 0.1249450968725133},
    {2.3328672526627079, 4.4092392852753575, 0.1249450968725133},
    {2.3328672526627079, 5.0155386754940219, 0.1249450968725133},
    {2.3328672526627079, 5.980035612070254, 0.1249450968725133},
    {0.9553166181245093, 0.78539816339744828, 0.12307173528167017},
    {0.9553166181245093, 2.3561944901923448, 0.12307173528167017},
    {0.9553166181245093, 3.9269908169872414, 0.12307173528167017},
    {0.9553166181245093, 5.497787143782138, 0.12307173528167017},
    {2.1862760354652839, 0.78539816339744828, 0.12307173528167017},
    {2.1862760354652839, 2.3561944901923448, 0.12307173528167017},
    {2.1862760354652839, 3.9269908169872414, 0.12307173528167017},
    {2.1862760354652839, 5.497787143782138, 0.12307173528167017},
    {0.49879650884702076, 0, 0.12183091738552138},
    {0.49879650884702076, 1.5707963267948966, 0.12183091738552138},
    {0.49879650884702076, 3.1415926535897931, 0.12183091738552138},
    {0.49879650884702076, 4.7123889803846897, 0.12183091738552138},
    {1.0719998179478758, 0, 0.12183091738552138},
    {1.0719998179478758, 1.5707963267948966, 0.12183091738552138},
    {1.0719998179478758, 3.1415926535897931, 0.12183091738552138},
    {1.0719998179478758, 4.7123889803846897, 0.12183091738552138},
    {1.5707963267948966, 0.49879650884702081, 0.12183091738552138},
    {1.5707963267948966, 1.0719998179478758, 0.12183091738552138},
    {1.5707963267948966, 2.0695928356419175, 0.12183091738552138},
    {1.5707963267948966, 2.6427961447427726, 0.12183091738552138},
    {1.5707963267948966, 3.6403891624368137, 0.12183091738552138},
    {1.5707963267948966, 4.2135924715376687, 0.12183091738552138},
    {1.5707963267948966, 5.2111854892317107, 0.12183091738552138},
    {1.5707963267948966, 5.7843887983325653, 0.12183091738552138},
    {2.0695928356419175, 0, 0.12183091738552138},
    {2.0695928356419175, 1.5707963267948966, 0.12183091738552138},
    {2.0695928356419175, 3.1415926535897931, 0.12183091738552138},
    {2.0695928356419175, 4.7123889803846897, 0.12183091738552138},
    {2.6427961447427726, 0, 0.12183091738552138},
    {2.6427961447427726, 1.5707963267948966, 0.12183091738552138},
    {2.6427961447427726, 3.1415926535897931, 0.12183091738552138},
    {2.6427961447427726, 4.7123889803846897, 0.12183091738552138},
    {0.5938903073609556, 0.78539816339744828, 0.12058024902852789},
    {0.5938903073609556, 2.3561944901923448, 0.12058024902852789},
    {0.5938903073609556, 3.9269908169872414, 0.12058024902852789},
    {0.5938903073609556, 5.497787143782138, 0.12058024902852789},
    {1.1639778514081469, 0.44543878054415104, 0.12058024902852789},
    {1.1639778514081469, 1.1253575462507457, 0.12058024902852789},
    {1.1639778514081469, 2.0162351073390479, 0.12058024902852789},
    {1.1639778514081469, 2.6961538730456422, 0.12058024902852789},
    {1.1639778514081469, 3.587031434133944, 0.12058024902852789},
    {1.1639778514081469, 4.2669501998405384, 0.12058024902852789},
    {1.1639778514081469, 5.157827760928841, 0.12058024902852789},
    {1.1639778514081469, 5.8377465266354349, 0.12058024902852789},
    {1.9776148021816464, 0.44543878054415104, 0.12058024902852789},
    {1.9776148021816464, 1.1253575462507457, 0.12058024902852789},
    {1.9776148021816464, 2.0162351073390479, 0.12058024902852789},
    {1.9776148021816464, 2.6961538730456422, 0.12058024902852789},
    {1.9776148021816464, 3.587031434133944, 0.12058024902852789},
    {1.9776148021816464, 4.2669501998405384, 0.12058024902852789},
    {1.9776148021816464, 5.157827760928841, 0.12058024902852789},
    {1.9776148021816464, 5.8377465266354349, 0.12058024902852789},
    {2.5477023462288377, 0.78539816339744828, 0.12058024902852789},
    {2.5477023462288377, 2.3561944901923448, 0.12058024902852789},
    {2.5477023462288377, 3.9269908169872414, 0.12058024902852789},
    {2.5477023462288377, 5.497787143782138, 0.12058024902852789},
    {0.26487957202170859, 0.78539816339744828, 0.10319173408833041},
    {0.26487957202170859, 2.3561944901923448, 0.10319173408833041},
    {0.26487957202170859, 3.9269908169872414, 0.10319173408833041},
    {0.26487957202170859, 5.497787143782138, 0.10319173408833041},
    {1.3846067967188931, 0.18950349792132287, 0.10319173408833041},
    {1.3846067967188931, 1.3812928288735737, 0.10319173408833041},
    {1.3846067967188931, 1.7602998247162196, 0.10319173408833041},
    {1.3846067967188931, 2.9520891556684705, 0.10319173408833041},
    {1.3846067967188931, 3.3310961515111157, 0.10319173408833041},
    {1.3846067967188931, 4.5228854824633666, 0.10319173408833041},
    {1.3846067967188931, 4.9018924783060127, 0.10319173408833041},
    {1.3846067967188931, 6.0936818092582632, 0.10319173408833041},
    {1.7569858568709, 0.18950349792132287, 0.10319173408833041},
    {1.7569858568709, 1.3812928288735737, 0.10319173408833041},
    {1.7569858568709, 1.7602998247162196, 0.10319173408833041},
    {1.7569858568709, 2.9520891556684705, 0.10319173408833041},
    {1.7569858568709, 3.3310961515111157, 0.10319173408833041},
    {1.7569858568709, 4.5228854824633666, 0.10319173408833041},
    {1.7569858568709, 4.9018924783060127, 0.10319173408833041},
    {1.7569858568709, 6.0936818092582632, 0.10319173408833041},
    {2.8767130815680848, 0.78539816339744828, 0.10319173408833041},
    {2.8767130815680848, 2.3561944901923448, 0.10319173408833041},
    {2.8767130815680848, 3.9269908169872414, 0.10319173408833041},
    {2.8767130815680848, 5.497787143782138, 0.10319173408833041},
    {0, 0, 0.048107465851396594},
    {1.5707963267948966, 0, 0.048107465851396594},
    {1.5707963267948966, 1.5707963267948966, 0.048107465851396594},
    {1.5707963267948966, 3.1415926535897931, 0.048107465851396594},
    {1.5707963267948966, 4.7123889803846897, 0.048107465851396594},
    {3.1415926535897931, 0, 0.048107465851396594},
};

constexpr LebedevPoint kLebedev146[] = {
    {0.22457587814697597, 0.78539816339744828, 0.095182644181910372},
    {0.22457587814697597, 2.3561944901923448, 0.095182644181910372},
    {0.22457587814697597, 3.9269908169872414, 0.095182644181910372},
    {0.22457587814697597, 5.497787143782138, 0.095182644181910372},
    {1.4126705260926564, 0.16014062132592541, 0.095182644181910372},
    {1.4126705260926564, 1.4106557054689712, 0.095182644181910372},
    {1.4126705260926564, 1.7309369481208221, 0.095182644181910372},
    {1.4126705260926564, 2.981452032263868, 0.095182644181910372},
    {1.4126705260926564, 3.3017332749157182, 0.095182644181910372},
    {1.4126705260926564, 4.5522483590587637, 0.095182644181910372},
    {1.4126705260926564, 4.8725296017106148, 0.095182644181910372},
    {1.4126705260926564, 6.1230446858536611, 0.095182644181910372},
    {1.7289221274971369, 0.16014062132592541, 0.095182644181910372},
    {1.7289221274971369, 1.4106557054689712, 0.095182644181910372},
    {1.7289221274971369, 1.7309369481208221, 0.095182644181910372},
    {1.7289221274971369, 2.981452032263868, 0.095182644181910372},
    {1.7289221274971369, 3.3017332749157182, 0.095182644181910372},
    {1.7289221274971369, 4.5522483590587637, 0.095182644181910372},
    {1.7289221274971369, 4.8725296017106148, 0.095182644181910372},
    {1.7289221274971369, 6.1230446858536611, 0.095182644181910372},
    {2.9170167754428173, 0.78539816339744828, 0.095182644181910372},
    {2.9170167754428173, 2.3561944901923448, 0.095182644181910372},
    {2.9170167754428173, 3.9269908169872414, 0.095182644181910372},
    {2.9170167754428173, 5.497787143782138, 0.095182644181910372},
    {0.78539816339744828, 0, 0.092651847003754312},
    {0.78539816339744828, 1.5707963267948966, 0.092651847003754312},
    {0.78539816339744828, 3.1415926535897931, 0.092651847003754312},
    {0.78539816339744828, 4.7123889803846897, 0.092651847003754312},
    {1.5707963267948966, 0.78539816339744828, 0.092651847003754312},
    {1.5707963267948966, 2.3561944901923448, 0.092651847003754312},
    {1.5707963267948966, 3.9269908169872414, 0.092651847003754312},
    {1.5707963267948966, 5.497787143782138, 0.092651847003754312},
    {2.3561944901923448, 0, 0.092651847003754312},
    {2.3561944901923448, 1.5707963267948966, 0.092651847003754312},
    {2.3561944901923448, 3.1415926535897931, 0.092651847003754312},
    {2.3561944901923448, 4.7123889803846897, 0.092651847003754312},
    {0.9553166181245093, 0.78539816339744828, 0.090610008336105136},
    {0.9553166181245093, 2.3561944901923448, 0.090610008336105136},
    {0.9553166181245093, 3.9269908169872414, 0.090610008336105136},
    {0.9553166181245093, 5.497787143782138, 0.090610008336105136},
    {2.1862760354652839, 0.78539816339744828, 0.090610008336105136},
    {2.1862760354652839, 2.3561944901923448, 0.090610008336105136},
    {2.1862760354652839, 3.9269908169872414, 0.090610008336105136},
    {2.1862760354652839, 5.497787143782138, 0.090610008336105136},
    {0.82787676416517675, 0.40663346457870991, 0.08942676055004592},
    {0.82787676416517675, 1.1641628622161866, 0.08942676055004592},
    {0.82787676416517675, 1.9774297913736065, 0.08942676055004592},
    {0.82787676416517675, 2.7349591890110831, 0.08942676055004592},
    {0.82787676416517675, 3.5482261181685031, 0.08942676055004592},
    {0.82787676416517675, 4.3057555158059797, 0.08942676055004592},
    {0.82787676416517675, 5.1190224449633996, 0.08942676055004592},
    {0.82787676416517675, 5.8765518426008763, 0.08942676055004592},
    {1.2752120035297652, 0.78539816339744828, 0.08942676055004592},
    {1.2752120035297652, 2.3561944901923448, 0.08942676055004592},
    {1.2752120035297652, 3.9269908169872414, 0.08942676055004592},
    {1.2752120035297652, 5.497787143782138, 0.08942676055004592},
    {1.866380650060028, 0.78539816339744828, 0.08942676055004592},
    {1.866380650060028, 2.3561944901923448, 0.08942676055004592},
    {1.866380650060028, 3.9269908169872414, 0.08942676055004592},
    {1.866380650060028, 5.497787143782138, 0.08942676055004592},
    {2.3137158894246164, 0.40663346457870991, 0.08942676055004592},
    {2.3137158894246164, 1.1641628622161866, 0.08942676055004592},
    {2.3137158894246164, 1.9774297913736065, 0.08942676055004592},
    {2.3137158894246164, 2.7349591890110831, 0.08942676055004592},
    {2.3137158894246164, 3.5482261181685031, 0.08942676055004592},
    {2.3137158894246164, 4.3057555158059797, 0.08942676055004592},
    {2.3137158894246164, 5.1190224449633996, 0.08942676055004592},
    {2.3137158894246164, 5.8765518426008763, 0.08942676055004592},
    {0.49013352322141868, 0.30276092334663107, 0.087852594678968152},
    {0.49013352322141868, 1.2680354034482657, 0.087852594678968152},
    {0.49013352322141868, 1.8735572501415276, 0.087852594678968152},
    {0.49013352322141868, 2.8388317302431623, 0.087852594678968152},
    {0.49013352322141868, 3.444353576936424, 0.087852594678968152},
    {0.49013352322141868, 4.4096280570380584, 0.087852594678968152},
    {0.49013352322141868, 5.0151499037313201, 0.087852594678968152},
    {0.49013352322141868, 5.9804243838329549, 0.087852594678968152},
    {1.1047779316142936, 0.15776237347000024, 0.087852594678968152},
    {1.1047779316142936, 1.4130339533248963, 0.087852594678968152},
    {1.1047779316142936, 1.7285587002648968, 0.087852594678968152},
    {1.1047779316142936, 2.9838302801197929, 0.087852594678968152},
    {1.1047779316142936, 3.2993550270597933, 0.087852594678968152},
    {1.1047779316142936, 4.5546266069146899, 0.087852594678968152},
    {1.1047779316142936, 4.8701513538546894, 0.087852594678968152},
    {1.1047779316142936, 6.1254229337095856, 0.087852594678968152},
    {1.4299759870159217, 0.47105334308227514, 0.087852594678968152},
    {1.4299759870159217, 1.0997429837126216, 0.087852594678968152},
    {1.4299759870159217, 2.0418496698771715, 0.087852594678968152},
    {1.4299759870159217, 2.6705393105075181, 0.087852594678968152},
    {1.4299759870159217, 3.6126459966720681, 0.087852594678968152},
    {1.4299759870159217, 4.2413356373024147, 0.087852594678968152},
    {1.4299759870159217, 5.1834423234669647, 0.087852594678968152},
    {1.4299759870159217, 5.8121319640973113, 0.087852594678968152},
    {1.7116166665738715, 0.47105334308227514, 0.087852594678968152},
    {1.7116166665738715, 1.0997429837126216, 0.087852594678968152},
    {1.7116166665738715, 2.0418496698771715, 0.087852594678968152},
    {1.7116166665738715, 2.6705393105075181, 0.087852594678968152},
    {1.7116166665738715, 3.6126459966720681, 0.087852594678968152},
    {1.7116166665738715, 4.2413356373024147, 0.087852594678968152},
    {1.7116166665738715, 5.1834423234669647, 0.087852594678968152},
    {1.7116166665738715, 5.8121319640973113, 0.087852594678968152},
    {2.0368147219754995, 0.15776237347000024, 0.087852594678968152},
    {2.0368147219754995, 1.4130339533248963, 0.087852594678968152},
    {2.0368147219754995, 1.7285587002648968, 0.087852594678968152},
    {2.0368147219754995, 2.9838302801197929, 0.087852594678968152},
    {2.0368147219754995, 3.2993550270597933, 0.087852594678968152},
    {2.0368147219754995, 4.5546266069146899, 0.087852594678968152},
    {2.0368147219754995, 4.8701513538546894, 0.087852594678968152},
    {2.0368147219754995, 6.1254229337095856, 0.087852594678968152},
    {2.6514591303683748, 0.30276092334663107, 0.087852594678968152},
    {2.6514591303683748, 1.2680354034482657, 0.087852594678968152},
    {2.6514591303683748, 1.8735572501415276, 0.087852594678968152},
    {2.6514591303683748, 2.8388317302431623, 0.087852594678968152},
    {2.6514591303683748, 3.444353576936424, 0.087852594678968152},
    {2.6514591303683748, 4.4096280570380584, 0.087852594678968152},
    {2.6514591303683748, 5.0151499037313201, 0.087852594678968152},
    {2.6514591303683748, 5.9804243838329549, 0.087852594678968152},
    {0.6315898794014978, 0.78539816339744828, 0.084871124391214747},
    {0.6315898794014978, 2.3561944901923448, 0.084871124391214747},
    {0.6315898794014978, 3.9269908169872414, 0.084871124391214747},
    {0.6315898794014978, 5.497787143782138, 0.084871124391214747},
    {1.1401082710628367, 0.47738044655300843, 0.084871124391214747},
    {1.1401082710628367, 1.0934158802418883, 0.084871124391214747},
    {1.1401082710628367, 2.048176773347905, 0.084871124391214747},
    {1.1401082710628367, 2.6642122070367846, 0.084871124391214747},
    {1.1401082710628367, 3.6189731001428016, 0.084871124391214747},
    {1.1401082710628367, 4.2350085338316816, 0.084871124391214747},
    {1.1401082710628367, 5.1897694269376977, 0.084871124391214747},
    {1.1401082710628367, 5.8058048606265782, 0.084871124391214747},
    {2.0014843825269564, 0.47738044655300843, 0.084871124391214747},
    {2.0014843825269564, 1.0934158802418883, 0.084871124391214747},
    {2.0014843825269564, 2.048176773347905, 0.084871124391214747},
    {2.0014843825269564, 2.6642122070367846, 0.084871124391214747},
    {2.0014843825269564, 3.6189731001428016, 0.084871124391214747},
    {2.0014843825269564, 4.2350085338316816, 0.084871124391214747},
    {2.0014843825269564, 5.1897694269376977, 0.084871124391214747},
    {2.0014843825269564, 5.8058048606265782, 0.084871124391214747},
    {2.5100027741882953, 0.78539816339744828, 0.084871124391214747},
    {2.5100027741882953, 2.3561944901923448, 0.084871124391214747},
    {2.5100027741882953, 3.9269908169872414, 0.084871124391214747},
    {2.5100027741882953, 5.497787143782138, 0.084871124391214747},
    {0, 0, 0.0075351900131171382},
    {1.5707963267948966, 0, 0.0075351900131171382},
    {1.5707963267948966, 1.5707963267948966, 0.0075351900131171382},
    {1.5707963267948966, 3.1415926535897931, 0.0075351900131171382},
    {1.5707963267948966, 4.7123889803846897, 0.0075351900131171382},
    {3.1415926535897931, 0, 0.0075351900131171382},
};

constexpr LebedevPoint kLebedev170[] = {
    {0.9553166181245093, 0.78539816339744828, 0.080219623085526007},
    {0.9553166181245093, 2.3561944901923448, 0.080219623085526007},
    {0.9553166181245093, 3.9269908169872414, 0.080219623085526007},
    {0.9553166181245093, 5.497787143782138, 0.080219623085526007},
    {2.1862760354652839, 0.78539816339744828, 0.080219623085526007},
    {2.1862760354652839, 2.3561944901923448, 0.080219623085526007},
    {2.1862760354652839, 3.9269908169872414, 0.080219623085526007},
    {2.1862760354652839, 5.497787143782138, 0.080219623085526007},
    {0.83069850592832484, 0.41955837960412795, 0.079393437452530538},
    {0.83069850592832484, 1.1512379471907686, 0.079393437452530538},
    {0.83069850592832484, 1.9903547063990246, 0.079393437452530538},
    {0.83069850592832484, 2.7220342739856651, 0.079393437452530538},
    {0.83069850592832484, 3.5611510331939211, 0.079393437452530538},
    {0.83069850592832484, 4.2928306007805617, 0.079393437452530538},
    {0.83069850592832484, 5.1319473599888177, 0.079393437452530538},
    {0.83069850592832484, 5.8636269275754582, 0.079393437452530538},
    {1.2652716500810328, 0.78539816339744828, 0.079393437452530538},
    {1.2652716500810328, 2.3561944901923448, 0.079393437452530538},
    {1.2652716500810328, 3.9269908169872414, 0.079393437452530538},
    {1.2652716500810328, 5.497787143782138, 0.079393437452530538},
    {1.8763210035087603, 0.78539816339744828, 0.079393437452530538},
    {1.8763210035087603, 2.3561944901923448, 0.079393437452530538},
    {1.8763210035087603, 3.9269908169872414, 0.079393437452530538},
    {1.8763210035087603, 5.497787143782138, 0.079393437452530538},
    {2.3108941476614682, 0.41955837960412795, 0.079393437452530538},
    {2.3108941476614682, 1.1512379471907686, 0.079393437452530538},
    {2.3108941476614682, 1.9903547063990246, 0.079393437452530538},
    {2.3108941476614682, 2.7220342739856651, 0.079393437452530538},
    {2.3108941476614682, 3.5611510331939211, 0.079393437452530538},
    {2.3108941476614682, 4.2928306007805617, 0.079393437452530538},
    {2.3108941476614682, 5.1319473599888177, 0.079393437452530538},
    {2.3108941476614682, 5.8636269275754582, 0.079393437452530538},
    {0.65705315453516155, 0.78539816339744828, 0.077932483730753635},
    {0.65705315453516155, 2.3561944901923448, 0.077932483730753635},
    {0.65705315453516155, 3.9269908169872414, 0.077932483730753635},
    {0.65705315453516155, 5.497787143782138, 0.077932483730753635},
    {1.1242078977252878, 0.49934923559793487, 0.077932483730753635},
    {1.1242078977252878, 1.0714470911969618, 0.077932483730753635},
    {1.1242078977252878, 2.0701455623928315, 0.077932483730753635},
    {1.1242078977252878, 2.6422434179918586, 0.077932483730753635},
    {1.1242078977252878, 3.6409418891877277, 0.077932483730753635},
    {1.1242078977252878, 4.2130397447867551, 0.077932483730753635},
    {1.1242078977252878, 5.2117382159826242, 0.077932483730753635},
    {1.1242078977252878, 5.7838360715816517, 0.077932483730753635},
    {2.0173847558645055, 0.49934923559793487, 0.077932483730753635},
    {2.0173847558645055, 1.0714470911969618, 0.077932483730753635},
    {2.0173847558645055, 2.0701455623928315, 0.077932483730753635},
    {2.0173847558645055, 2.6422434179918586, 0.077932483730753635},
    {2.0173847558645055, 3.6409418891877277, 0.077932483730753635},
    {2.0173847558645055, 4.2130397447867551, 0.077932483730753635},
    {2.0173847558645055, 5.2117382159826242, 0.077932483730753635},
    {2.0173847558645055, 5.7838360715816517, 0.077932483730753635},
    {2.4845394990546317, 0.78539816339744828, 0.077932483730753635},
    {2.4845394990546317, 2.3561944901923448, 0.077932483730753635},
    {2.4845394990546317, 3.9269908169872414, 0.077932483730753635},
    {2.4845394990546317, 5.497787143782138, 0.077932483730753635},
    {0.78539816339744828, 0, 0.076294617719352795},
    {0.78539816339744828, 1.5707963267948966, 0.076294617719352795},
    {0.78539816339744828, 3.1415926535897931, 0.076294617719352795},
    {0.78539816339744828, 4.7123889803846897, 0.076294617719352795},
    {1.5707963267948966, 0.78539816339744828, 0.076294617719352795},
    {1.5707963267948966, 2.3561944901923448, 0.076294617719352795},
    {1.5707963267948966, 3.9269908169872414, 0.076294617719352795},
    {1.5707963267948966, 5.497787143782138, 0.076294617719352795},
    {2.3561944901923448, 0, 0.076294617719352795},
    {2.3561944901923448, 1.5707963267948966, 0.076294617719352795},
    {2.3561944901923448, 3.1415926535897931, 0.076294617719352795},
    {2.3561944901923448, 4.7123889803846897, 0.076294617719352795},
    {0.54637086806983948, 0.28214639143631942, 0.075000925158008297},
    {0.54637086806983948, 1.2886499353585772, 0.075000925158008297},
    {0.54637086806983948, 1.8529427182312159, 0.075000925158008297},
    {0.54637086806983948, 2.8594462621534738, 0.075000925158008297},
    {0.54637086806983948, 3.4237390450261125, 0.075000925158008297},
    {0.54637086806983948, 4.4302425889483708, 0.075000925158008297},
    {0.54637086806983948, 4.9945353718210086, 0.075000925158008297},
    {0.54637086806983948, 6.0010389157432664, 0.075000925158008297},
    {1.0482995747578578, 0.16772166274949687, 0.075000925158008297},
    {1.0482995747578578, 1.4030746640453997, 0.075000925158008297},
    {1.0482995747578578, 1.7385179895443934, 0.075000925158008297},
    {1.0482995747578578, 2.9738709908402963, 0.075000925158008297},
    {1.0482995747578578, 3.30931431633929, 0.075000925158008297},
    {1.0482995747578578, 4.5446673176351933, 0.075000925158008297},
    {1.0482995747578578, 4.8801106431341861, 0.075000925158008297},
    {1.0482995747578578, 6.1154636444300889, 0.075000925158008297},
    {1.4256238701470745, 0.5286297365230509, 0.075000925158008297},
    {1.4256238701470745, 1.0421665902718458, 0.075000925158008297},
    {1.4256238701470745, 2.0994260633179476, 0.075000925158008297},
    {1.4256238701470745, 2.6129629170667421, 0.075000925158008297},
    {1.4256238701470745, 3.6702223901128441, 0.075000925158008297},
    {1.4256238701470745, 4.1837592438616387, 0.075000925158008297},
    {1.4256238701470745, 5.2410187169077407, 0.075000925158008297},
    {1.4256238701470745, 5.7545555706565352, 0.075000925158008297},
    {1.7159687834427189, 0.5286297365230509, 0.075000925158008297},
    {1.7159687834427189, 1.0421665902718458, 0.075000925158008297},
    {1.7159687834427189, 2.0994260633179476, 0.075000925158008297},
    {1.7159687834427189, 2.6129629170667421, 0.075000925158008297},
    {1.7159687834427189, 3.6702223901128441, 0.075000925158008297},
    {1.7159687834427189, 4.1837592438616387, 0.075000925158008297},
    {1.7159687834427189, 5.2410187169077407, 0.075000925158008297},
    {1.7159687834427189, 5.7545555706565352, 0.075000925158008297},
    {2.0932930788319357, 0.16772166274949687, 0.075000925158008297},
    {2.0932930788319357, 1.4030746640453997, 0.075000925158008297},
    {2.0932930788319357, 1.7385179895443934, 0.075000925158008297},
    {2.0932930788319357, 2.9738709908402963, 0.075000925158008297},
    {2.0932930788319357, 3.30931431633929, 0.075000925158008297},
    {2.0932930788319357, 4.5446673176351933, 0.075000925158008297},
    {2.0932930788319357, 4.8801106431341861, 0.075000925158008297},
    {2.0932930788319357, 6.1154636444300889, 0.075000925158008297},
    {2.5952217855199535, 0.28214639143631942, 0.075000925158008297},
    {2.5952217855199535, 1.2886499353585772, 0.075000925158008297},
    {2.5952217855199535, 1.8529427182312159, 0.075000925158008297},
    {2.5952217855199535, 2.8594462621534738, 0.075000925158008297},
    {2.5952217855199535, 3.4237390450261125, 0.075000925158008297},
    {2.5952217855199535, 4.4302425889483708, 0.075000925158008297},
    {2.5952217855199535, 4.9945353718210086, 0.075000925158008297},
    {2.5952217855199535, 6.0010389157432664, 0.075000925158008297},
    {0, 0, 0.069678550905400385},
    {1.5707963267948966, 0, 0.069678550905400385},
    {1.5707963267948966, 1.5707963267948966, 0.069678550905400385},
    {1.5707963267948966, 3.1415926535897931, 0.069678550905400385},
    {1.5707963267948966, 4.7123889803846897, 0.069678550905400385},
    {3.1415926535897931, 0, 0.069678550905400385},
    {0.26446523810834727, 0, 0.068827813685621686},
    {0.26446523810834727, 1.5707963267948966, 0.068827813685621686},
    {0.26446523810834727, 3.1415926535897931, 0.068827813685621686},
    {0.26446523810834727, 4.7123889803846897, 0.068827813685621686},
    {1.3063310886865491, 0, 0.068827813685621686},
    {1.3063310886865491, 1.5707963267948966, 0.068827813685621686},
    {1.3063310886865491, 3.1415926535897931, 0.068827813685621686},
    {1.3063310886865491, 4.7123889803846897, 0.068827813685621686},
    {1.5707963267948966, 0.26446523810834743, 0.068827813685621686},
    {1.5707963267948966, 1.3063310886865491, 0.068827813685621686},
    {1.5707963267948966, 1.835261564903244, 0.068827813685621686},
    {1.5707963267948966, 2.8771274154814459, 0.068827813685621686},
    {1.5707963267948966, 3.4060578916981403, 0.068827813685621686},
    {1.5707963267948966, 4.447923742276342, 0.068827813685621686},
    {1.5707963267948966, 4.9768542184930373, 0.068827813685621686},
    {1.5707963267948966, 6.0187200690712386, 0.068827813685621686},
    {1.835261564903244, 0, 0.068827813685621686},
    {1.835261564903244, 1.5707963267948966, 0.068827813685621686},
    {1.835261564903244, 3.1415926535897931, 0.068827813685621686},
    {1.835261564903244, 4.7123889803846897, 0.068827813685621686},
    {2.8771274154814459, 0, 0.068827813685621686},
    {2.8771274154814459, 1.5707963267948966, 0.068827813685621686},
    {2.8771274154814459, 3.1415926535897931, 0.068827813685621686},
    {2.8771274154814459, 4.7123889803846897, 0.068827813685621686},
    {0.36912725013344255, 0.78539816339744828, 0.06513636946550791},
    {0.36912725013344255, 2.3561944901923448, 0.06513636946550791},
    {0.36912725013344255, 3.9269908169872414, 0.06513636946550791},
    {0.36912725013344255, 5.497787143782138, 0.06513636946550791},
    {1.3128190766509795, 0.26701853773014123, 0.06513636946550791},
    {1.3128190766509795, 1.3037777890647555, 0.06513636946550791},
    {1.3128190766509795, 1.8378148645250378, 0.06513636946550791},
    {1.3128190766509795, 2.8745741158596521, 0.06513636946550791},
    {1.3128190766509795, 3.4086111913199342, 0.06513636946550791},
    {1.3128190766509795, 4.4453704426545482, 0.06513636946550791},
    {1.3128190766509795, 4.9794075181148312, 0.06513636946550791},
    {1.3128190766509795, 6.0161667694494447, 0.06513636946550791},
    {1.8287735769388136, 0.26701853773014123, 0.06513636946550791},
    {1.8287735769388136, 1.3037777890647555, 0.06513636946550791},
    {1.8287735769388136, 1.8378148645250378, 0.06513636946550791},
    {1.8287735769388136, 2.8745741158596521, 0.06513636946550791},
    {1.8287735769388136, 3.4086111913199342, 0.06513636946550791},
    {1.8287735769388136, 4.4453704426545482, 0.06513636946550791},
    {1.8287735769388136, 4.9794075181148312, 0.06513636946550791},
    {1.8287735769388136, 6.0161667694494447, 0.06513636946550791},
    {2.7724654034563505, 0.78539816339744828, 0.06513636946550791},
    {2.7724654034563505, 2.3561944901923448, 0.06513636946550791},
    {2.7724654034563505, 3.9269908169872414, 0.06513636946550791},
    {2.7724654034563505, 5.497787143782138, 0.06513636946550791},
};

constexpr LebedevPoint kLebedev194[] = {
    {0.78539816339744828, 0, 0.071840758934847357},
    {0.78539816339744828, 1.5707963267948966, 0.071840758934847357},
    {0.78539816339744828, 3.1415926535897931, 0.071840758934847357},
    {0.78539816339744828, 4.7123889803846897, 0.071840758934847357},
    {1.5707963267948966, 0.78539816339744828, 0.071840758934847357},
    {1.5707963267948966, 2.3561944901923448, 0.071840758934847357},
    {1.5707963267948966, 3.9269908169872414, 0.071840758934847357},
    {1.5707963267948966, 5.497787143782138, 0.071840758934847357},
    {2.3561944901923448, 0, 0.071840758934847357},
    {2.3561944901923448, 1.5707963267948966, 0.071840758934847357},
    {2.3561944901923448, 3.1415926535897931, 0.071840758934847357},
    {2.3561944901923448, 4.7123889803846897, 0.071840758934847357},
    {0.83483856614181917, 0.43775795114590677, 0.070481054168070129},
    {0.83483856614181917, 1.1330383756489899, 0.070481054168070129},
    {0.83483856614181917, 2.0085542779408034, 0.070481054168070129},
    {0.83483856614181917, 2.7038347024438867, 0.070481054168070129},
    {0.83483856614181917, 3.5793506047356995, 0.070481054168070129},
    {0.83483856614181917, 4.2746310292387832, 0.070481054168070129},
    {0.83483856614181917, 5.1501469315305961, 0.070481054168070129},
    {0.83483856614181917, 5.8454273560336798, 0.070481054168070129},
    {1.2511856323329762, 0.78539816339744828, 0.070481054168070129},
    {1.2511856323329762, 2.3561944901923448, 0.070481054168070129},
    {1.2511856323329762, 3.9269908169872414, 0.070481054168070129},
    {1.2511856323329762, 5.497787143782138, 0.070481054168070129},
    {1.8904070212568169, 0.78539816339744828, 0.070481054168070129},
    {1.8904070212568169, 2.3561944901923448, 0.070481054168070129},
    {1.8904070212568169, 3.9269908169872414, 0.070481054168070129},
    {1.8904070212568169, 5.497787143782138, 0.070481054168070129},
    {2.3067540874479739, 0.43775795114590677, 0.070481054168070129},
    {2.3067540874479739, 1.1330383756489899, 0.070481054168070129},
    {2.3067540874479739, 2.0085542779408034, 0.070481054168070129},
    {2.3067540874479739, 2.7038347024438867, 0.070481054168070129},
    {2.3067540874479739, 3.5793506047356995, 0.070481054168070129},
    {2.3067540874479739, 4.2746310292387832, 0.070481054168070129},
    {2.3067540874479739, 5.1501469315305961, 0.070481054168070129},
    {2.3067540874479739, 5.8454273560336798, 0.070481054168070129},
    {0.9553166181245093, 0.78539816339744828, 0.07003719860124849},
    {0.9553166181245093, 2.3561944901923448, 0.07003719860124849},
    {0.9553166181245093, 3.9269908169872414, 0.07003719860124849},
    {0.9553166181245093, 5.497787143782138, 0.07003719860124849},
    {2.1862760354652839, 0.78539816339744828, 0.07003719860124849},
    {2.1862760354652839, 2.3561944901923448, 0.07003719860124849},
    {2.1862760354652839, 3.9269908169872414, 0.07003719860124849},
    {2.1862760354652839, 5.497787143782138, 0.07003719860124849},
    {0.58077803408978801, 0.29408607800034853, 0.06949515747104322},
    {0.58077803408978801, 1.2767102487945481, 0.06949515747104322},
    {0.58077803408978801, 1.864882404795245, 0.06949515747104322},
    {0.58077803408978801, 2.8475065755894446, 0.06949515747104322},
    {0.58077803408978801, 3.4356787315901416, 0.06949515747104322},
    {0.58077803408978801, 4.4183029023843412, 0.06949515747104322},
    {0.58077803408978801, 5.0064750583850381, 0.06949515747104322},
    {0.58077803408978801, 5.9890992291792378, 0.06949515747104322},
    {1.0179418913750822, 0.18798690086507344, 0.06949515747104322},
    {1.0179418913750822, 1.3828094259298231, 0.06949515747104322},
    {1.0179418913750822, 1.75878322765997, 0.06949515747104322},
    {1.0179418913750822, 2.9536057527247199, 0.06949515747104322},
    {1.0179418913750822, 3.3295795544548663, 0.06949515747104322},
    {1.0179418913750822, 4.524402079519616, 0.06949515747104322},
    {1.0179418913750822, 4.9003758812497633, 0.06949515747104322},
    {1.0179418913750822, 6.0951984063145126, 0.06949515747104322},
    {1.4110763938431827, 0.56082915570186653, 0.06949515747104322},
    {1.4110763938431827, 1.00996717109303, 0.06949515747104322},
    {1.4110763938431827, 2.1316254824967631, 0.06949515747104322},
    {1.4110763938431827, 2.5807634978879266, 0.06949515747104322},
    {1.4110763938431827, 3.7024218092916596, 0.06949515747104322},
    {1.4110763938431827, 4.1515598246828231, 0.06949515747104322},
    {1.4110763938431827, 5.2732181360865562, 0.06949515747104322},
    {1.4110763938431827, 5.7223561514777197, 0.06949515747104322},
    {1.7305162597466106, 0.56082915570186653, 0.06949515747104322},
    {1.7305162597466106, 1.00996717109303, 0.06949515747104322},
    {1.7305162597466106, 2.1316254824967631, 0.06949515747104322},
    {1.7305162597466106, 2.5807634978879266, 0.06949515747104322},
    {1.7305162597466106, 3.7024218092916596, 0.06949515747104322},
    {1.7305162597466106, 4.1515598246828231, 0.06949515747104322},
    {1.7305162597466106, 5.2732181360865562, 0.06949515747104322},
    {1.7305162597466106, 5.7223561514777197, 0.06949515747104322},
    {2.1236507622147114, 0.18798690086507344, 0.06949515747104322},
    {2.1236507622147114, 1.3828094259298231, 0.06949515747104322},
    {2.1236507622147114, 1.75878322765997, 0.06949515747104322},
    {2.1236507622147114, 2.9536057527247199, 0.06949515747104322},
    {2.1236507622147114, 3.3295795544548663, 0.06949515747104322},
    {2.1236507622147114, 4.524402079519616, 0.06949515747104322},
    {2.1236507622147114, 4.9003758812497633, 0.06949515747104322},
    {2.1236507622147114, 6.0951984063145126, 0.06949515747104322},
    {2.5608146195000052, 0.29408607800034853, 0.06949515747104322},
    {2.5608146195000052, 1.2767102487945481, 0.06949515747104322},
    {2.5608146195000052, 1.864882404795245, 0.06949515747104322},
    {2.5608146195000052, 2.8475065755894446, 0.06949515747104322},
    {2.5608146195000052, 3.4356787315901416, 0.06949515747104322},
    {2.5608146195000052, 4.4183029023843412, 0.06949515747104322},
    {2.5608146195000052, 5.0064750583850381, 0.06949515747104322},
    {2.5608146195000052, 5.9890992291792378, 0.06949515747104322},
    {0.68012642192193173, 0.78539816339744828, 0.069350927593711004},
    {0.68012642192193173, 2.3561944901923448, 0.069350927593711004},
    {0.68012642192193173, 3.9269908169872414, 0.069350927593711004},
    {0.68012642192193173, 5.497787143782138, 0.069350927593711004},
    {1.10996449541479, 0.5195449866495595, 0.069350927593711004},
    {1.10996449541479, 1.0512513401453372, 0.069350927593711004},
    {1.10996449541479, 2.0903413134444562, 0.069350927593711004},
    {1.10996449541479, 2.6220476669402339, 0.069350927593711004},
    {1.10996449541479, 3.6611376402393523, 0.069350927593711004},
    {1.10996449541479, 4.1928439937351296, 0.069350927593711004},
    {1.10996449541479, 5.2319339670342488, 0.069350927593711004},
    {1.10996449541479, 5.7636403205300271, 0.069350927593711004},
    {2.0316281581750033, 0.5195449866495595, 0.069350927593711004},
    {2.0316281581750033, 1.0512513401453372, 0.069350927593711004},
    {2.0316281581750033, 2.0903413134444562, 0.069350927593711004},
    {2.0316281581750033, 2.6220476669402339, 0.069350927593711004},
    {2.0316281581750033, 3.6611376402393523, 0.069350927593711004},
    {2.0316281581750033, 4.1928439937351296, 0.069350927593711004},
    {2.0316281581750033, 5.2319339670342488, 0.069350927593711004},
    {2.0316281581750033, 5.7636403205300271, 0.069350927593711004},
    {2.4614662316678615, 0.78539816339744828, 0.069350927593711004},
    {2.4614662316678615, 2.3561944901923448, 0.069350927593711004},
    {2.4614662316678615, 3.9269908169872414, 0.069350927593711004},
    {2.4614662316678615, 5.497787143782138, 0.069350927593711004},
    {0.42141976340669068, 0.78539816339744828, 0.064820326803510464},
    {0.42141976340669068, 2.3561944901923448, 0.064820326803510464},
    {0.42141976340669068, 3.9269908169872414, 0.064820326803510464},
    {0.42141976340669068, 5.497787143782138, 0.064820326803510464},
    {1.2773566640691283, 0.30696050190349877, 0.064820326803510464},
    {1.2773566640691283, 1.2638358248913979, 0.064820326803510464},
    {1.2773566640691283, 1.8777568286983954, 0.064820326803510464},
    {1.2773566640691283, 2.8346321516862947, 0.064820326803510464},
    {1.2773566640691283, 3.4485531554932916, 0.064820326803510464},
    {1.2773566640691283, 4.4054284784811912, 0.064820326803510464},
    {1.2773566640691283, 5.0193494822881881, 0.064820326803510464},
    {1.2773566640691283, 5.9762248052760878, 0.064820326803510464},
    {1.8642359895206648, 0.30696050190349877, 0.064820326803510464},
    {1.8642359895206648, 1.2638358248913979, 0.064820326803510464},
    {1.8642359895206648, 1.8777568286983954, 0.064820326803510464},
    {1.8642359895206648, 2.8346321516862947, 0.064820326803510464},
    {1.8642359895206648, 3.4485531554932916, 0.064820326803510464},
    {1.8642359895206648, 4.4054284784811912, 0.064820326803510464},
    {1.8642359895206648, 5.0193494822881881, 0.064820326803510464},
    {1.8642359895206648, 5.9762248052760878, 0.064820326803510464},
    {2.7201728901831026, 0.78539816339744828, 0.064820326803510464},
    {2.7201728901831026, 2.3561944901923448, 0.064820326803510464},
    {2.7201728901831026, 3.9269908169872414, 0.064820326803510464},
    {2.7201728901831026, 5.497787143782138, 0.064820326803510464},
    {0.3530595115392991, 0, 0.063483369934641556},
    {0.3530595115392991, 1.5707963267948966, 0.063483369934641556},
    {0.3530595115392991, 3.1415926535897931, 0.063483369934641556},
    {0.3530595115392991, 4.7123889803846897, 0.063483369934641556},
    {1.2177368152555974, 0, 0.063483369934641556},
    {1.2177368152555974, 1.5707963267948966, 0.063483369934641556},
    {1.2177368152555974, 3.1415926535897931, 0.063483369934641556},
    {1.2177368152555974, 4.7123889803846897, 0.063483369934641556},
    {1.5707963267948966, 0.35305951153929921, 0.063483369934641556},
    {1.5707963267948966, 1.2177368152555974, 0.063483369934641556},
    {1.5707963267948966, 1.9238558383341959, 0.063483369934641556},
    {1.5707963267948966, 2.7885331420504942, 0.063483369934641556},
    {1.5707963267948966, 3.494652165129092, 0.063483369934641556},
    {1.5707963267948966, 4.3593294688453899, 0.063483369934641556},
    {1.5707963267948966, 5.0654484919239886, 0.063483369934641556},
    {1.5707963267948966, 5.9301257956402873, 0.063483369934641556},
    {1.9238558383341959, 0, 0.063483369934641556},
    {1.9238558383341959, 1.5707963267948966, 0.063483369934641556},
    {1.9238558383341959, 3.1415926535897931, 0.063483369934641556},
    {1.9238558383341959, 4.7123889803846897, 0.063483369934641556},
    {2.7885331420504942, 0, 0.063483369934641556},
    {2.7885331420504942, 1.5707963267948966, 0.063483369934641556},
    {2.7885331420504942, 3.1415926535897931, 0.063483369934641556},
    {2.7885331420504942, 4.7123889803846897, 0.063483369934641556},
    {0.18480390510717115, 0.78539816339744828, 0.051607282166513162},
    {0.18480390510717115, 2.3561944901923448, 0.051607282166513162},
    {0.18480390510717115, 3.9269908169872414, 0.051607282166513162},
    {0.18480390510717115, 5.497787143782138, 0.051607282166513162},
    {1.4404943707983895, 0.13142243893440125, 0.051607282166513162},
    {1.4404943707983895, 1.4393738878604954, 0.051607282166513162},
    {1.4404943707983895, 1.702218765729298, 0.051607282166513162},
    {1.4404943707983895, 3.0101702146553921, 0.051607282166513162},
    {1.4404943707983895, 3.2730150925241941, 0.051607282166513162},
    {1.4404943707983895, 4.5809665414502883, 0.051607282166513162},
    {1.4404943707983895, 4.8438114193190911, 0.051607282166513162},
    {1.4404943707983895, 6.1517628682451848, 0.051607282166513162},
    {1.7010982827914038, 0.13142243893440125, 0.051607282166513162},
    {1.7010982827914038, 1.4393738878604954, 0.051607282166513162},
    {1.7010982827914038, 1.702218765729298, 0.051607282166513162},
    {1.7010982827914038, 3.0101702146553921, 0.051607282166513162},
    {1.7010982827914038, 3.2730150925241941, 0.051607282166513162},
    {1.7010982827914038, 4.5809665414502883, 0.051607282166513162},
    {1.7010982827914038, 4.8438114193190911, 0.051607282166513162},
    {1.7010982827914038, 6.1517628682451848, 0.051607282166513162},
    {2.9567887484826221, 0.78539816339744828, 0.051607282166513162},
    {2.9567887484826221, 2.3561944901923448, 0.051607282166513162},
    {2.9567887484826221, 3.9269908169872414, 0.051607282166513162},
    {2.9567887484826221, 5.497787143782138, 0.051607282166513162},
    {0, 0, 0.022397550621038466},
    {1.5707963267948966, 0, 0.022397550621038466},
    {1.5707963267948966, 1.5707963267948966, 0.022397550621038466},
    {1.5707963267948966, 3.1415926535897931, 0.022397550621038466},
    {1.5707963267948966, 4.7123889803846897, 0.022397550621038466},
    {3.1415926535897931, 0, 0.022397550621038466},
};

constexpr LebedevPoint kLebedev230[] = {
    {0.057144733818812972, 0.78539816339744828, 0.21671263449840283},
    {0.057144733818812972, 2.3561944901923448, 0.21671263449840283},
    {0.057144733818812972, 3.9269908169872414, 0.21671263449840283},
    {0.057144733818812972, 5.497787143782138, 0.21671263449840283},
    {1.5303999002289674, 0.040429427851835453, 0.21671263449840283},
    {1.5303999002289674, 1.5303668989430612, 0.21671263449840283},
    {1.5303999002289674, 1.6112257546467321, 0.21671263449840283},
    {1.5303999002289674, 3.1011632257379578, 0.21671263449840283},
    {1.5303999002289674, 3.1820220814416285, 0.21671263449840283},
    {1.5303999002289674, 4.6719595525328543, 0.21671263449840283},
    {1.5303999002289674, 4.752818408236525, 0.21671263449840283},
    {1.5303999002289674, 6.2427558793277509, 0.21671263449840283},
    {1.6111927533608259, 0.040429427851835453, 0.21671263449840283},
    {1.6111927533608259, 1.5303668989430612, 0.21671263449840283},
    {1.6111927533608259, 1.6112257546467321, 0.21671263449840283},
    {1.6111927533608259, 3.1011632257379578, 0.21671263449840283},
    {1.6111927533608259, 3.1820220814416285, 0.21671263449840283},
    {1.6111927533608259, 4.6719595525328543, 0.21671263449840283},
    {1.6111927533608259, 4.752818408236525, 0.21671263449840283},
    {1.6111927533608259, 6.2427558793277509, 0.21671263449840283},
    {3.0844479197709802, 0.78539816339744828, 0.21671263449840283},
    {3.0844479197709802, 2.3561944901923448, 0.21671263449840283},
    {3.0844479197709802, 3.9269908169872414, 0.21671263449840283},
    {3.0844479197709802, 5.497787143782138, 0.21671263449840283},
    {0.36247312031499584, 0, 0.065320872391164839},
    {0.36247312031499584, 1.5707963267948966, 0.065320872391164839},
    {0.36247312031499584, 3.1415926535897931, 0.065320872391164839},
    {0.36247312031499584, 4.7123889803846897, 0.065320872391164839},
    {1.2083232064799005, 0, 0.065320872391164839},
    {1.2083232064799005, 1.5707963267948966, 0.065320872391164839},
    {1.2083232064799005, 3.1415926535897931, 0.065320872391164839},
    {1.2083232064799005, 4.7123889803846897, 0.065320872391164839},
    {1.5707963267948966, 0.36247312031499601, 0.065320872391164839},
    {1.5707963267948966, 1.2083232064799005, 0.065320872391164839},
    {1.5707963267948966, 1.9332694471098928, 0.065320872391164839},
    {1.5707963267948966, 2.7791195332747973, 0.065320872391164839},
    {1.5707963267948966, 3.5040657739047889, 0.065320872391164839},
    {1.5707963267948966, 4.349915860069693, 0.065320872391164839},
    {1.5707963267948966, 5.0748621006996855, 0.065320872391164839},
    {1.5707963267948966, 5.9207121868645904, 0.065320872391164839},
    {1.9332694471098928, 0, 0.065320872391164839},
    {1.9332694471098928, 1.5707963267948966, 0.065320872391164839},
    {1.9332694471098928, 3.1415926535897931, 0.065320872391164839},
    {1.9332694471098928, 4.7123889803846897, 0.065320872391164839},
    {2.7791195332747973, 0, 0.065320872391164839},
    {2.7791195332747973, 1.5707963267948966, 0.065320872391164839},
    {2.7791195332747973, 3.1415926535897931, 0.065320872391164839},
    {2.7791195332747973, 4.7123889803846897, 0.065320872391164839},
    {0.3644560687492473, 0.78539816339744828, 0.063449533547486378},
    {0.3644560687492473, 2.3561944901923448, 0.063449533547486378},
    {0.3644560687492473, 3.9269908169872414, 0.063449533547486378},
    {0.3644560687492473, 5.497787143782138, 0.063449533547486378},
    {1.3160065797210396, 0.26348851227237335, 0.063449533547486378},
    {1.3160065797210396, 1.3073078145225234, 0.063449533547486378},
    {1.3160065797210396, 1.8342848390672699, 0.063449533547486378},
    {1.3160065797210396, 2.87810414131742, 0.063449533547486378},
    {1.3160065797210396, 3.4050811658621662, 0.063449533547486378},
    {1.3160065797210396, 4.4489004681123161, 0.063449533547486378},
    {1.3160065797210396, 4.9758774926570624, 0.063449533547486378},
    {1.3160065797210396, 6.0196967949072127, 0.063449533547486378},
    {1.8255860738687537, 0.26348851227237335, 0.063449533547486378},
    {1.8255860738687537, 1.3073078145225234, 0.063449533547486378},
    {1.8255860738687537, 1.8342848390672699, 0.063449533547486378},
    {1.8255860738687537, 2.87810414131742, 0.063449533547486378},
    {1.8255860738687537, 3.4050811658621662, 0.063449533547486378},
    {1.8255860738687537, 4.4489004681123161, 0.063449533547486378},
    {1.8255860738687537, 4.9758774926570624, 0.063449533547486378},
    {1.8255860738687537, 6.0196967949072127, 0.063449533547486378},
    {2.7771365848405458, 0.78539816339744828, 0.063449533547486378},
    {2.7771365848405458, 2.3561944901923448, 0.063449533547486378},
    {2.7771365848405458, 3.9269908169872414, 0.063449533547486378},
    {2.7771365848405458, 5.497787143782138, 0.063449533547486378},
    {0.56677571946186189, 0.43696579628436277, 0.05900817004291968},
    {0.56677571946186189, 1.1338305305105338, 0.05900817004291968},
    {0.56677571946186189, 2.0077621230792593, 0.05900817004291968},
    {0.56677571946186189, 2.7046268573054304, 0.05900817004291968},
    {0.56677571946186189, 3.5785584498741558, 0.05900817004291968},
    {0.56677571946186189, 4.275423184100327, 0.05900817004291968},
    {0.56677571946186189, 5.1493547766690524, 0.05900817004291968},
    {0.56677571946186189, 5.8462195108952235, 0.05900817004291968},
    {1.062755843177758, 0.26308897391970082, 0.05900817004291968},
    {1.062755843177758, 1.3077073528751959, 0.05900817004291968},
    {1.062755843177758, 1.8338853007145974, 0.05900817004291968},
    {1.062755843177758, 2.8785036796700925, 0.05900817004291968},
    {1.062755843177758, 3.4046816275094938, 0.05900817004291968},
    {1.062755843177758, 4.4493000064649886, 0.05900817004291968},
    {1.062755843177758, 4.9754779543043899, 0.05900817004291968},
    {1.062755843177758, 6.0200963332598851, 0.05900817004291968},
    {1.3415761353612545, 0.52305842874909625, 0.05900817004291968},
    {1.3415761353612545, 1.0477378980458005, 0.05900817004291968},
    {1.3415761353612545, 2.093854755543993, 0.05900817004291968},
    {1.3415761353612545, 2.6185342248406971, 0.05900817004291968},
    {1.3415761353612545, 3.6646510823388891, 0.05900817004291968},
    {1.3415761353612545, 4.1893305516355932, 0.05900817004291968},
    {1.3415761353612545, 5.2354474091337853, 0.05900817004291968},
    {1.3415761353612545, 5.7601268784304898, 0.05900817004291968},
    {1.8000165182285386, 0.52305842874909625, 0.05900817004291968},
    {1.8000165182285386, 1.0477378980458005, 0.05900817004291968},
    {1.8000165182285386, 2.093854755543993, 0.05900817004291968},
    {1.8000165182285386, 2.6185342248406971, 0.05900817004291968},
    {1.8000165182285386, 3.6646510823388891, 0.05900817004291968},
    {1.8000165182285386, 4.1893305516355932, 0.05900817004291968},
    {1.8000165182285386, 5.2354474091337853, 0.05900817004291968},
    {1.8000165182285386, 5.7601268784304898, 0.05900817004291968},
    {2.0788368104120352, 0.26308897391970082, 0.05900817004291968},
    {2.0788368104120352, 1.3077073528751959, 0.05900817004291968},
    {2.0788368104120352, 1.8338853007145974, 0.05900817004291968},
    {2.0788368104120352, 2.8785036796700925, 0.05900817004291968},
    {2.0788368104120352, 3.4046816275094938, 0.05900817004291968},
    {2.0788368104120352, 4.4493000064649886, 0.05900817004291968},
    {2.0788368104120352, 4.9754779543043899, 0.05900817004291968},
    {2.0788368104120352, 6.0200963332598851, 0.05900817004291968},
    {2.5748169341279312, 0.43696579628436277, 0.05900817004291968},
    {2.5748169341279312, 1.1338305305105338, 0.05900817004291968},
    {2.5748169341279312, 2.0077621230792593, 0.05900817004291968},
    {2.5748169341279312, 2.7046268573054304, 0.05900817004291968},
    {2.5748169341279312, 3.5785584498741558, 0.05900817004291968},
    {2.5748169341279312, 4.275423184100327, 0.05900817004291968},
    {2.5748169341279312, 5.1493547766690524, 0.05900817004291968},
    {2.5748169341279312, 5.8462195108952235, 0.05900817004291968},
    {0.68835944147989225, 0.78539816339744828, 0.056508971453371054},
    {0.68835944147989225, 2.3561944901923448, 0.056508971453371054},
    {0.68835944147989225, 3.9269908169872414, 0.056508971453371054},
    {0.68835944147989225, 5.497787143782138, 0.056508971453371054},
    {1.1049216120040868, 0.52681991559228047, 0.056508971453371054},
    {1.1049216120040868, 1.0439764112026162, 0.056508971453371054},
    {1.1049216120040868, 2.0976162423871774, 0.056508971453371054},
    {1.1049216120040868, 2.6147727379975128, 0.056508971453371054},
    {1.1049216120040868, 3.6684125691820735, 0.056508971453371054},
    {1.1049216120040868, 4.1855690647924089, 0.056508971453371054},
    {1.1049216120040868, 5.2392088959769705, 0.056508971453371054},
    {1.1049216120040868, 5.7563653915873054, 0.056508971453371054},
    {2.0366710415857066, 0.52681991559228047, 0.056508971453371054},
    {2.0366710415857066, 1.0439764112026162, 0.056508971453371054},
    {2.0366710415857066, 2.0976162423871774, 0.056508971453371054},
    {2.0366710415857066, 2.6147727379975128, 0.056508971453371054},
    {2.0366710415857066, 3.6684125691820735, 0.056508971453371054},
    {2.0366710415857066, 4.1855690647924089, 0.056508971453371054},
    {2.0366710415857066, 5.2392088959769705, 0.056508971453371054},
    {2.0366710415857066, 5.7563653915873054, 0.056508971453371054},
    {2.4532332121099012, 0.78539816339744828, 0.056508971453371054},
    {2.4532332121099012, 2.3561944901923448, 0.056508971453371054},
    {2.4532332121099012, 3.9269908169872414, 0.056508971453371054},
    {2.4532332121099012, 5.497787143782138, 0.056508971453371054},
    {0.9553166181245093, 0.78539816339744828, 0.055923800052828487},
    {0.9553166181245093, 2.3561944901923448, 0.055923800052828487},
    {0.9553166181245093, 3.9269908169872414, 0.055923800052828487},
    {0.9553166181245093, 5.497787143782138, 0.055923800052828487},
    {2.1862760354652839, 0.78539816339744828, 0.055923800052828487},
    {2.1862760354652839, 2.3561944901923448, 0.055923800052828487},
    {2.1862760354652839, 3.9269908169872414, 0.055923800052828487},
    {2.1862760354652839, 5.497787143782138, 0.055923800052828487},
    {0.85165280584426584, 0.50421558072519013, 0.055309631794969331},
    {0.85165280584426584, 1.0665807460697065, 0.055309631794969331},
    {0.85165280584426584, 2.0750119075200866, 0.055309631794969331},
    {0.85165280584426584, 2.6373770728646031, 0.055309631794969331},
    {0.85165280584426584, 3.6458082343149831, 0.055309631794969331},
    {0.85165280584426584, 4.2081733996594997, 0.055309631794969331},
    {0.85165280584426584, 5.2166045611098797, 0.055309631794969331},
    {0.85165280584426584, 5.7789697264543962, 0.055309631794969331},
    {1.1987895397968549, 0.78539816339744828, 0.055309631794969331},
    {1.1987895397968549, 2.3561944901923448, 0.055309631794969331},
    {1.1987895397968549, 3.9269908169872414, 0.055309631794969331},
    {1.1987895397968549, 5.497787143782138, 0.055309631794969331},
    {1.9428031137929385, 0.78539816339744828, 0.055309631794969331},
    {1.9428031137929385, 2.3561944901923448, 0.055309631794969331},
    {1.9428031137929385, 3.9269908169872414, 0.055309631794969331},
    {1.9428031137929385, 5.497787143782138, 0.055309631794969331},
    {2.2899398477455275, 0.50421558072519013, 0.055309631794969331},
    {2.2899398477455275, 1.0665807460697065, 0.055309631794969331},
    {2.2899398477455275, 2.0750119075200866, 0.055309631794969331},
    {2.2899398477455275, 2.6373770728646031, 0.055309631794969331},
    {2.2899398477455275, 3.6458082343149831, 0.055309631794969331},
    {2.2899398477455275, 4.2081733996594997, 0.055309631794969331},
    {2.2899398477455275, 5.2166045611098797, 0.055309631794969331},
    {2.2899398477455275, 5.7789697264543962, 0.055309631794969331},
    {0.62165856487358218, 0, 0.05316935827641036},
    {0.62165856487358218, 1.5707963267948966, 0.05316935827641036},
    {0.62165856487358218, 3.1415926535897931, 0.05316935827641036},
    {0.62165856487358218, 4.7123889803846897, 0.05316935827641036},
    {0.94913776192131438, 0, 0.05316935827641036},
    {0.94913776192131438, 1.5707963267948966, 0.05316935827641036},
    {0.94913776192131438, 3.1415926535897931, 0.05316935827641036},
    {0.94913776192131438, 4.7123889803846897, 0.05316935827641036},
    {1.5707963267948966, 0.62165856487358218, 0.05316935827641036},
    {1.5707963267948966, 0.94913776192131438, 0.05316935827641036},
    {1.5707963267948966, 2.1924548916684787, 0.05316935827641036},
    {1.5707963267948966, 2.5199340887162109, 0.05316935827641036},
    {1.5707963267948966, 3.7632512184633753, 0.05316935827641036},
    {1.5707963267948966, 4.0907304155111071, 0.05316935827641036},
    {1.5707963267948966, 5.3340475452582723, 0.05316935827641036},
    {1.5707963267948966, 5.6615267423060036, 0.05316935827641036},
    {2.1924548916684787, 0, 0.05316935827641036},
    {2.1924548916684787, 1.5707963267948966, 0.05316935827641036},
    {2.1924548916684787, 3.1415926535897931, 0.05316935827641036},
    {2.1924548916684787, 4.7123889803846897, 0.05316935827641036},
    {2.5199340887162109, 0, 0.05316935827641036},
    {2.5199340887162109, 1.5707963267948966, 0.05316935827641036},
    {2.5199340887162109, 3.1415926535897931, 0.05316935827641036},
    {2.5199340887162109, 4.7123889803846897, 0.05316935827641036},
    {0.79792926931169172, 0.22296242582925246, 0.049969016868749376},
    {0.79792926931169172, 1.3478339009656441, 0.049969016868749376},
    {0.79792926931169172, 1.7937587526241492, 0.049969016868749376},
    {0.79792926931169172, 2.9186302277605409, 0.049969016868749376},
    {0.79792926931169172, 3.3645550794190453, 0.049969016868749376},
    {0.79792926931169172, 4.489426554555437, 0.049969016868749376},
    {0.79792926931169172, 4.9353514062139423, 0.049969016868749376},
    {0.79792926931169172, 6.0602228813503336, 0.049969016868749376},
    {1.4118253876716382, 0.78539816339744828, 0.049969016868749376},
    {1.4118253876716382, 2.3561944901923448, 0.049969016868749376},
    {1.4118253876716382, 3.9269908169872414, 0.049969016868749376},
    {1.4118253876716382, 5.497787143782138, 0.049969016868749376},
    {1.7297672659181549, 0.78539816339744828, 0.049969016868749376},
    {1.7297672659181549, 2.3561944901923448, 0.049969016868749376},
    {1.7297672659181549, 3.9269908169872414, 0.049969016868749376},
    {1.7297672659181549, 5.497787143782138, 0.049969016868749376},
    {2.3436633842781016, 0.22296242582925246, 0.049969016868749376},
    {2.3436633842781016, 1.3478339009656441, 0.049969016868749376},
    {2.3436633842781016, 1.7937587526241492, 0.049969016868749376},
    {2.3436633842781016, 2.9186302277605409, 0.049969016868749376},
    {2.3436633842781016, 3.3645550794190453, 0.049969016868749376},
    {2.3436633842781016, 4.489426554555437, 0.049969016868749376},
    {2.3436633842781016, 4.9353514062139423, 0.049969016868749376},
    {2.3436633842781016, 6.0602228813503336, 0.049969016868749376},
    {0, 0, -0.69399540000948357},
    {1.5707963267948966, 0, -0.69399540000948357},
    {1.5707963267948966, 1.5707963267948966, -0.69399540000948357},
    {1.5707963267948966, 3.1415926535897931, -0.69399540000948357},
    {1.5707963267948966, 4.7123889803846897, -0.69399540000948357},
    {3.1415926535897931, 0, -0.69399540000948357},
};

constexpr LebedevPoint kLebedev266[] = {
    {0.78987044556992214, 0.13355183503660467, 0.066792370686745567},
    {0.78987044556992214, 1.4372444917582921, 0.066792370686745567},
    {0.78987044556992214, 1.7043481618315013, 0.066792370686745567},
    {0.78987044556992214, 3.0080408185531886, 0.066792370686745567},
    {0.78987044556992214, 3.2751444886263976, 0.066792370686745567},
    {0.78987044556992214, 4.5788371453480847, 0.066792370686745567},
    {0.78987044556992214, 4.8459408154212937, 0.066792370686745567},
    {0.78987044556992214, 6.1496334721429813, 0.066792370686745567},
    {1.4760796929495532, 0.78539816339744828, 0.066792370686745567},
    {1.4760796929495532, 2.3561944901923448, 0.066792370686745567},
    {1.4760796929495532, 3.9269908169872414, 0.066792370686745567},
    {1.4760796929495532, 5.497787143782138, 0.066792370686745567},
    {1.6655129606402399, 0.78539816339744828, 0.066792370686745567},
    {1.6655129606402399, 2.3561944901923448, 0.066792370686745567},
    {1.6655129606402399, 3.9269908169872414, 0.066792370686745567},
    {1.6655129606402399, 5.497787143782138, 0.066792370686745567},
    {2.3517222080198712, 0.13355183503660467, 0.066792370686745567},
    {2.3517222080198712, 1.4372444917582921, 0.066792370686745567},
    {2.3517222080198712, 1.7043481618315013, 0.066792370686745567},
    {2.3517222080198712, 3.0080408185531886, 0.066792370686745567},
    {2.3517222080198712, 3.2751444886263976, 0.066792370686745567},
    {2.3517222080198712, 4.5788371453480847, 0.066792370686745567},
    {2.3517222080198712, 4.8459408154212937, 0.066792370686745567},
    {2.3517222080198712, 6.1496334721429813, 0.066792370686745567},
    {0.84726708206461998, 0.48787398086324996, 0.053484123945439596},
    {0.84726708206461998, 1.0829223459316466, 0.053484123945439596},
    {0.84726708206461998, 2.0586703076581463, 0.053484123945439596},
    {0.84726708206461998, 2.6537186727265434, 0.053484123945439596},
    {0.84726708206461998, 3.6294666344530429, 0.053484123945439596},
    {0.84726708206461998, 4.2245149995214399, 0.053484123945439596},
    {0.84726708206461998, 5.2002629612479394, 0.053484123945439596},
    {0.84726708206461998, 5.7953113263163365, 0.053484123945439596},
    {1.2118209268836098, 0.78539816339744828, 0.053484123945439596},
    {1.2118209268836098, 2.3561944901923448, 0.053484123945439596},
    {1.2118209268836098, 3.9269908169872414, 0.053484123945439596},
    {1.2118209268836098, 5.497787143782138, 0.053484123945439596},
    {1.9297717267061836, 0.78539816339744828, 0.053484123945439596},
    {1.9297717267061836, 2.3561944901923448, 0.053484123945439596},
    {1.9297717267061836, 3.9269908169872414, 0.053484123945439596},
    {1.9297717267061836, 5.497787143782138, 0.053484123945439596},
    {2.2943255715251731, 0.48787398086324996, 0.053484123945439596},
    {2.2943255715251731, 1.0829223459316466, 0.053484123945439596},
    {2.2943255715251731, 2.0586703076581463, 0.053484123945439596},
    {2.2943255715251731, 2.6537186727265434, 0.053484123945439596},
    {2.2943255715251731, 3.6294666344530429, 0.053484123945439596},
    {2.2943255715251731, 4.2245149995214399, 0.053484123945439596},
    {2.2943255715251731, 5.2002629612479394, 0.053484123945439596},
    {2.2943255715251731, 5.7953113263163365, 0.053484123945439596},
    {0.55357435889704532, 0, 0.053150503760415385},
    {0.55357435889704532, 1.5707963267948966, 0.053150503760415385},
    {0.55357435889704532, 3.1415926535897931, 0.053150503760415385},
    {0.55357435889704532, 4.7123889803846897, 0.053150503760415385},
    {1.0172219678978511, 0, 0.053150503760415385},
    {1.0172219678978511, 1.5707963267948966, 0.053150503760415385},
    {1.0172219678978511, 3.1415926535897931, 0.053150503760415385},
    {1.0172219678978511, 4.7123889803846897, 0.053150503760415385},
    {1.5707963267948966, 0.55357435889704532, 0.053150503760415385},
    {1.5707963267948966, 1.0172219678978514, 0.053150503760415385},
    {1.5707963267948966, 2.1243706856919422, 0.053150503760415385},
    {1.5707963267948966, 2.5880182946927479, 0.053150503760415385},
    {1.5707963267948966, 3.6951670124868383, 0.053150503760415385},
    {1.5707963267948966, 4.158814621487644, 0.053150503760415385},
    {1.5707963267948966, 5.2659633392817344, 0.053150503760415385},
    {1.5707963267948966, 5.7296109482825406, 0.053150503760415385},
    {2.1243706856919422, 0, 0.053150503760415385},
    {2.1243706856919422, 1.5707963267948966, 0.053150503760415385},
    {2.1243706856919422, 3.1415926535897931, 0.053150503760415385},
    {2.1243706856919422, 4.7123889803846897, 0.053150503760415385},
    {2.5880182946927479, 0, 0.053150503760415385},
    {2.5880182946927479, 1.5707963267948966, 0.053150503760415385},
    {2.5880182946927479, 3.1415926535897931, 0.053150503760415385},
    {2.5880182946927479, 4.7123889803846897, 0.053150503760415385},
    {0.9553166181245093, 0.78539816339744828, 0.052613557585617844},
    {0.9553166181245093, 2.3561944901923448, 0.052613557585617844},
    {0.9553166181245093, 3.9269908169872414, 0.052613557585617844},
    {0.9553166181245093, 5.497787143782138, 0.052613557585617844},
    {2.1862760354652839, 0.78539816339744828, 0.052613557585617844},
    {2.1862760354652839, 2.3561944901923448, 0.052613557585617844},
    {2.1862760354652839, 3.9269908169872414, 0.052613557585617844},
    {2.1862760354652839, 5.497787143782138, 0.052613557585617844},
    {0.71716214220763308, 0.78539816339744828, 0.051678977913145449},
    {0.71716214220763308, 2.3561944901923448, 0.051678977913145449},
    {0.71716214220763308, 3.9269908169872414, 0.051678977913145449},
    {0.71716214220763308, 5.497787143782138, 0.051678977913145449},
    {1.0874498721095811, 0.55256442921561044, 0.051678977913145449},
    {1.0874498721095811, 1.0182318975792861, 0.051678977913145449},
    {1.0874498721095811, 2.123360756010507, 0.051678977913145449},
    {1.0874498721095811, 2.5890282243741827, 0.051678977913145449},
    {1.0874498721095811, 3.6941570828054036, 0.051678977913145449},
    {1.0874498721095811, 4.1598245511690788, 0.051678977913145449},
    {1.0874498721095811, 5.2649534096003006, 0.051678977913145449},
    {1.0874498721095811, 5.7306208779639753, 0.051678977913145449},
    {2.0541427814802122, 0.55256442921561044, 0.051678977913145449},
    {2.0541427814802122, 1.0182318975792861, 0.051678977913145449},
    {2.0541427814802122, 2.123360756010507, 0.051678977913145449},
    {2.0541427814802122, 2.5890282243741827, 0.051678977913145449},
    {2.0541427814802122, 3.6941570828054036, 0.051678977913145449},
    {2.0541427814802122, 4.1598245511690788, 0.051678977913145449},
    {2.0541427814802122, 5.2649534096003006, 0.051678977913145449},
    {2.0541427814802122, 5.7306208779639753, 0.051678977913145449},
    {2.4244305113821603, 0.78539816339744828, 0.051678977913145449},
    {2.4244305113821603, 2.3561944901923448, 0.051678977913145449},
    {2.4244305113821603, 3.9269908169872414, 0.051678977913145449},
    {2.4244305113821603, 5.497787143782138, 0.051678977913145449},
    {0.35042199004756813, 0.34255651876140431, 0.051282280606568455},
    {0.35042199004756813, 1.2282398080334924, 0.051282280606568455},
    {0.35042199004756813, 1.9133528455563009, 0.051282280606568455},
    {0.35042199004756813, 2.799036134828389, 0.051282280606568455},
    {0.35042199004756813, 3.4841491723511973, 0.051282280606568455},
    {0.35042199004756813, 4.3698324616232851, 0.051282280606568455},
    {0.35042199004756813, 5.0549454991460934, 0.051282280606568455},
    {0.35042199004756813, 5.9406287884181816, 0.051282280606568455},
    {1.2415304238250842, 0.12216099812689837, 0.051282280606568455},
    {1.2415304238250842, 1.4486353286679983, 0.051282280606568455},
    {1.2415304238250842, 1.6929573249217951, 0.051282280606568455},
    {1.2415304238250842, 3.019431655462895, 0.051282280606568455},
    {1.2415304238250842, 3.2637536517166912, 0.051282280606568455},
    {1.2415304238250842, 4.5902279822577912, 0.051282280606568455},
    {1.2415304238250842, 4.8345499785115882, 0.051282280606568455},
    {1.2415304238250842, 6.1610243090526877, 0.051282280606568455},
    {1.4552280418842072, 0.33156148338177477, 0.051282280606568455},
    {1.4552280418842072, 1.2392348434131217, 0.051282280606568455},
    {1.4552280418842072, 1.9023578101766714, 0.051282280606568455},
    {1.4552280418842072, 2.8100311702080183, 0.051282280606568455},
    {1.4552280418842072, 3.4731541369715679, 0.051282280606568455},
    {1.4552280418842072, 4.3808274970029153, 0.051282280606568455},
    {1.4552280418842072, 5.0439504637664641, 0.051282280606568455},
    {1.4552280418842072, 5.9516238237978119, 0.051282280606568455},
    {1.6863646117055859, 0.33156148338177477, 0.051282280606568455},
    {1.6863646117055859, 1.2392348434131217, 0.051282280606568455},
    {1.6863646117055859, 1.9023578101766714, 0.051282280606568455},
    {1.6863646117055859, 2.8100311702080183, 0.051282280606568455},
    {1.6863646117055859, 3.4731541369715679, 0.051282280606568455},
    {1.6863646117055859, 4.3808274970029153, 0.051282280606568455},
    {1.6863646117055859, 5.0439504637664641, 0.051282280606568455},
    {1.6863646117055859, 5.9516238237978119, 0.051282280606568455},
    {1.9000622297647092, 0.12216099812689837, 0.051282280606568455},
    {1.9000622297647092, 1.4486353286679983, 0.051282280606568455},
    {1.9000622297647092, 1.6929573249217951, 0.051282280606568455},
    {1.9000622297647092, 3.019431655462895, 0.051282280606568455},
    {1.9000622297647092, 3.2637536517166912, 0.051282280606568455},
    {1.9000622297647092, 4.5902279822577912, 0.051282280606568455},
    {1.9000622297647092, 4.8345499785115882, 0.051282280606568455},
    {1.9000622297647092, 6.1610243090526877, 0.051282280606568455},
    {2.7911706635422253, 0.34255651876140431, 0.051282280606568455},
    {2.7911706635422253, 1.2282398080334924, 0.051282280606568455},
    {2.7911706635422253, 1.9133528455563009, 0.051282280606568455},
    {2.7911706635422253, 2.799036134828389, 0.051282280606568455},
    {2.7911706635422253, 3.4841491723511973, 0.051282280606568455},
    {2.7911706635422253, 4.3698324616232851, 0.051282280606568455},
    {2.7911706635422253, 5.0549454991460934, 0.051282280606568455},
    {2.7911706635422253, 5.9406287884181816, 0.051282280606568455},
    {0.61053155967794492, 0.41562716663343147, 0.051163570728433076},
    {0.61053155967794492, 1.1551691601614651, 0.051163570728433076},
    {0.61053155967794492, 1.986423493428328, 0.051163570728433076},
    {0.61053155967794492, 2.7259654869563619, 0.051163570728433076},
    {0.61053155967794492, 3.5572198202232244, 0.051163570728433076},
    {0.61053155967794492, 4.2967618137512584, 0.051163570728433076},
    {0.61053155967794492, 5.1280161470181209, 0.051163570728433076},
    {0.61053155967794492, 5.867558140546155, 0.051163570728433076},
    {1.0186757170906571, 0.27534184308479831, 0.051163570728433076},
    {1.0186757170906571, 1.2954544837100983, 0.051163570728433076},
    {1.0186757170906571, 1.846138169879695, 0.051163570728433076},
    {1.0186757170906571, 2.8662508105049951, 0.051163570728433076},
    {1.0186757170906571, 3.4169344966745911, 0.051163570728433076},
    {1.0186757170906571, 4.4370471372998912, 0.051163570728433076},
    {1.0186757170906571, 4.9877308234694882, 0.051163570728433076},
    {1.0186757170906571, 6.0078434640947878, 0.051163570728433076},
    {1.3371986106471279, 0.56941202514424671, 0.051163570728433076},
    {1.3371986106471279, 1.0013843016506498, 0.051163570728433076},
    {1.3371986106471279, 2.140208351939143, 0.051163570728433076},
    {1.3371986106471279, 2.5721806284455466, 0.051163570728433076},
    {1.3371986106471279, 3.7110046787340396, 0.051163570728433076},
    {1.3371986106471279, 4.1429769552404432, 0.051163570728433076},
    {1.3371986106471279, 5.2818010055289362, 0.051163570728433076},
    {1.3371986106471279, 5.7137732820353397, 0.051163570728433076},
    {1.8043940429426655, 0.56941202514424671, 0.051163570728433076},
    {1.8043940429426655, 1.0013843016506498, 0.051163570728433076},
    {1.8043940429426655, 2.140208351939143, 0.051163570728433076},
    {1.8043940429426655, 2.5721806284455466, 0.051163570728433076},
    {1.8043940429426655, 3.7110046787340396, 0.051163570728433076},
    {1.8043940429426655, 4.1429769552404432, 0.051163570728433076},
    {1.8043940429426655, 5.2818010055289362, 0.051163570728433076},
    {1.8043940429426655, 5.7137732820353397, 0.051163570728433076},
    {2.122916936499136, 0.27534184308479831, 0.051163570728433076},
    {2.122916936499136, 1.2954544837100983, 0.051163570728433076},
    {2.122916936499136, 1.846138169879695, 0.051163570728433076},
    {2.122916936499136, 2.8662508105049951, 0.051163570728433076},
    {2.122916936499136, 3.4169344966745911, 0.051163570728433076},
    {2.122916936499136, 4.4370471372998912, 0.051163570728433076},
    {2.122916936499136, 4.9877308234694882, 0.051163570728433076},
    {2.122916936499136, 6.0078434640947878, 0.051163570728433076},
    {2.5310610939118483, 0.41562716663343147, 0.051163570728433076},
    {2.5310610939118483, 1.1551691601614651, 0.051163570728433076},
    {2.5310610939118483, 1.986423493428328, 0.051163570728433076},
    {2.5310610939118483, 2.7259654869563619, 0.051163570728433076},
    {2.5310610939118483, 3.5572198202232244, 0.051163570728433076},
    {2.5310610939118483, 4.2967618137512584, 0.051163570728433076},
    {2.5310610939118483, 5.1280161470181209, 0.051163570728433076},
    {2.5310610939118483, 5.867558140546155, 0.051163570728433076},
    {0.14368674842727452, 0.78539816339744828, 0.050857891039543995},
    {0.14368674842727452, 2.3561944901923448, 0.050857891039543995},
    {0.14368674842727452, 3.9269908169872414, 0.050857891039543995},
    {0.14368674842727452, 5.497787143782138, 0.050857891039543995},
    {1.4693698902956132, 0.10195220351299908, 0.050857891039543995},
    {1.4693698902956132, 1.4688441232818976, 0.050857891039543995},
    {1.4693698902956132, 1.6727485303078957, 0.050857891039543995},
    {1.4693698902956132, 3.039640450076794, 0.050857891039543995},
    {1.4693698902956132, 3.2435448571027923, 0.050857891039543995},
    {1.4693698902956132, 4.6104367768716905, 0.050857891039543995},
    {1.4693698902956132, 4.8143411838976888, 0.050857891039543995},
    {1.4693698902956132, 6.1812331036665871, 0.050857891039543995},
    {1.6722227632941802, 0.10195220351299908, 0.050857891039543995},
    {1.6722227632941802, 1.4688441232818976, 0.050857891039543995},
    {1.6722227632941802, 1.6727485303078957, 0.050857891039543995},
    {1.6722227632941802, 3.039640450076794, 0.050857891039543995},
    {1.6722227632941802, 3.2435448571027923, 0.050857891039543995},
    {1.6722227632941802, 4.6104367768716905, 0.050857891039543995},
    {1.6722227632941802, 4.8143411838976888, 0.050857891039543995},
    {1.6722227632941802, 6.1812331036665871, 0.050857891039543995},
    {2.9979059051625185, 0.78539816339744828, 0.050857891039543995},
    {2.9979059051625185, 2.3561944901923448, 0.050857891039543995},
    {2.9979059051625185, 3.9269908169872414, 0.050857891039543995},
    {2.9979059051625185, 5.497787143782138, 0.050857891039543995},
    {0.48193796675930778, 0.78539816339744828, 0.045183452425762327},
    {0.48193796675930778, 2.3561944901923448, 0.045183452425762327},
    {0.48193796675930778, 3.9269908169872414, 0.045183452425762327},
    {0.48193796675930778, 5.497787143782138, 0.045183452425762327},
    {1.2368836827986049, 0.3542664325632584, 0.045183452425762327},
    {1.2368836827986049, 1.2165298942316383, 0.045183452425762327},
    {1.2368836827986049, 1.9250627593581551, 0.045183452425762327},
    {1.2368836827986049, 2.787326221026535, 0.045183452425762327},
    {1.2368836827986049, 3.4958590861530512, 0.045183452425762327},
    {1.2368836827986049, 4.3581225478214307, 0.045183452425762327},
    {1.2368836827986049, 5.0666554129479477, 0.045183452425762327},
    {1.2368836827986049, 5.9289188746163282, 0.045183452425762327},
    {1.9047089707911882, 0.3542664325632584, 0.045183452425762327},
    {1.9047089707911882, 1.2165298942316383, 0.045183452425762327},
    {1.9047089707911882, 1.9250627593581551, 0.045183452425762327},
    {1.9047089707911882, 2.787326221026535, 0.045183452425762327},
    {1.9047089707911882, 3.4958590861530512, 0.045183452425762327},
    {1.9047089707911882, 4.3581225478214307, 0.045183452425762327},
    {1.9047089707911882, 5.0666554129479477, 0.045183452425762327},
    {1.9047089707911882, 5.9289188746163282, 0.045183452425762327},
    {2.6596546868304856, 0.78539816339744828, 0.045183452425762327},
    {2.6596546868304856, 2.3561944901923448, 0.045183452425762327},
    {2.6596546868304856, 3.9269908169872414, 0.045183452425762327},
    {2.6596546868304856, 5.497787143782138, 0.045183452425762327},
    {0, 0, -0.016509309755693702},
    {1.5707963267948966, 0, -0.016509309755693702},
    {1.5707963267948966, 1.5707963267948966, -0.016509309755693702},
    {1.5707963267948966, 3.1415926535897931, -0.016509309755693702},
    {1.5707963267948966, 4.7123889803846897, -0.016509309755693702},
    {3.1415926535897931, 0, -0.016509309755693702},
    {0.78539816339744828, 0, -0.031701543864744733},
    {0.78539816339744828, 1.5707963267948966, -0.031701543864744733},
    {0.78539816339744828, 3.1415926535897931, -0.031701543864744733},
    {0.78539816339744828, 4.7123889803846897, -0.031701543864744733},
    {1.5707963267948966, 0.78539816339744828, -0.031701543864744733},
    {1.5707963267948966, 2.3561944901923448, -0.031701543864744733},
    {1.5707963267948966, 3.9269908169872414, -0.031701543864744733},
    {1.5707963267948966, 5.497787143782138, -0.031701543864744733},
    {2.3561944901923448, 0, -0.031701543864744733},
    {2.3561944901923448, 1.5707963267948966, -0.031701543864744733},
    {2.3561944901923448, 3.1415926535897931, -0.031701543864744733},
    {2.3561944901923448, 4.7123889803846897, -0.031701543864744733},
};

constexpr LebedevPoint kLebedev302[] = {
    {0.79374986901382327, 0.18227114659499577, 0.045867828378660352},
    {0.79374986901382327, 1.3885251801999008, 0.045867828378660352},
    {0.79374986901382327, 1.7530674733898923, 0.045867828378660352},
    {0.79374986901382327, 2.9593215069947973, 0.045867828378660352},
    {0.79374986901382327, 3.3238638001847889, 0.045867828378660352},
    {0.79374986901382327, 4.5301178337896939, 0.045867828378660352},
    {0.79374986901382327, 4.8946601269796854, 0.045867828378660352},
    {0.79374986901382327, 6.1009141605845905, 0.045867828378660352},
    {1.4411951517318788, 0.78539816339744828, 0.045867828378660352},
    {1.4411951517318788, 2.3561944901923448, 0.045867828378660352},
    {1.4411951517318788, 3.9269908169872414, 0.045867828378660352},
    {1.4411951517318788, 5.497787143782138, 0.045867828378660352},
    {1.7003975018579145, 0.78539816339744828, 0.045867828378660352},
    {1.7003975018579145, 2.3561944901923448, 0.045867828378660352},
    {1.7003975018579145, 3.9269908169872414, 0.045867828378660352},
    {1.7003975018579145, 5.497787143782138, 0.045867828378660352},
    {2.34784278457597, 0.18227114659499577, 0.045867828378660352},
    {2.34784278457597, 1.3885251801999008, 0.045867828378660352},
    {2.34784278457597, 1.7530674733898923, 0.045867828378660352},
    {2.34784278457597, 2.9593215069947973, 0.045867828378660352},
    {2.34784278457597, 3.3238638001847889, 0.045867828378660352},
    {2.34784278457597, 4.5301178337896939, 0.045867828378660352},
    {2.34784278457597, 4.8946601269796854, 0.045867828378660352},
    {2.34784278457597, 6.1009141605845905, 0.045867828378660352},
    {0.8544506409974445, 0.51432875307800485, 0.045299536808460591},
    {0.8544506409974445, 1.0564675737168918, 0.045299536808460591},
    {0.8544506409974445, 2.0851250798729017, 0.045299536808460591},
    {0.8544506409974445, 2.6272639005117884, 0.045299536808460591},
    {0.8544506409974445, 3.6559214066677979, 0.045299536808460591},
    {0.8544506409974445, 4.1980602273066845, 0.045299536808460591},
    {0.8544506409974445, 5.226717733462694, 0.045299536808460591},
    {0.8544506409974445, 5.768856554101581, 0.045299536808460591},
    {1.1906738802750234, 0.78539816339744828, 0.045299536808460591},
    {1.1906738802750234, 2.3561944901923448, 0.045299536808460591},
    {1.1906738802750234, 3.9269908169872414, 0.045299536808460591},
    {1.1906738802750234, 5.497787143782138, 0.045299536808460591},
    {1.9509187733147697, 0.78539816339744828, 0.045299536808460591},
    {1.9509187733147697, 2.3561944901923448, 0.045299536808460591},
    {1.9509187733147697, 3.9269908169872414, 0.045299536808460591},
    {1.9509187733147697, 5.497787143782138, 0.045299536808460591},
    {2.2871420125923487, 0.51432875307800485, 0.045299536808460591},
    {2.2871420125923487, 1.0564675737168918, 0.045299536808460591},
    {2.2871420125923487, 2.0851250798729017, 0.045299536808460591},
    {2.2871420125923487, 2.6272639005117884, 0.045299536808460591},
    {2.2871420125923487, 3.6559214066677979, 0.045299536808460591},
    {2.2871420125923487, 4.1980602273066845, 0.045299536808460591},
    {2.2871420125923487, 5.226717733462694, 0.045299536808460591},
    {2.2871420125923487, 5.768856554101581, 0.045299536808460591},
    {0.60881477323488842, 0, 0.045249250350174325},
    {0.60881477323488842, 1.5707963267948966, 0.045249250350174325},
    {0.60881477323488842, 3.1415926535897931, 0.045249250350174325},
    {0.60881477323488842, 4.7123889803846897, 0.045249250350174325},
    {0.96198155356000814, 0, 0.045249250350174325},
    {0.96198155356000814, 1.5707963267948966, 0.045249250350174325},
    {0.96198155356000814, 3.1415926535897931, 0.045249250350174325},
    {0.96198155356000814, 4.7123889803846897, 0.045249250350174325},
    {1.5707963267948966, 0.60881477323488842, 0.045249250350174325},
    {1.5707963267948966, 0.96198155356000814, 0.045249250350174325},
    {1.5707963267948966, 2.1796111000297849, 0.045249250350174325},
    {1.5707963267948966, 2.5327778803549048, 0.045249250350174325},
    {1.5707963267948966, 3.7504074268246814, 0.045249250350174325},
    {1.5707963267948966, 4.1035742071498014, 0.045249250350174325},
    {1.5707963267948966, 5.321203753619578, 0.045249250350174325},
    {1.5707963267948966, 5.6743705339446979, 0.045249250350174325},
    {2.1796111000297849, 0, 0.045249250350174325},
    {2.1796111000297849, 1.5707963267948966, 0.045249250350174325},
    {2.1796111000297849, 3.1415926535897931, 0.045249250350174325},
    {2.1796111000297849, 4.7123889803846897, 0.045249250350174325},
    {2.5327778803549048, 0, 0.045249250350174325},
    {2.5327778803549048, 1.5707963267948966, 0.045249250350174325},
    {2.5327778803549048, 3.1415926535897931, 0.045249250350174325},
    {2.5327778803549048, 4.7123889803846897, 0.045249250350174325},
    {0.9553166181245093, 0.78539816339744828, 0.045227866820918727},
    {0.9553166181245093, 2.3561944901923448, 0.045227866820918727},
    {0.9553166181245093, 3.9269908169872414, 0.045227866820918727},
    {0.9553166181245093, 5.497787143782138, 0.045227866820918727},
    {2.1862760354652839, 0.78539816339744828, 0.045227866820918727},
    {2.1862760354652839, 2.3561944901923448, 0.045227866820918727},
    {2.1862760354652839, 3.9269908169872414, 0.045227866820918727},
    {2.1862760354652839, 5.497787143782138, 0.045227866820918727},
    {0.73257903933866386, 0.78539816339744828, 0.044946510516838671},
    {0.73257903933866386, 2.3561944901923448, 0.044946510516838671},
    {0.73257903933866386, 3.9269908169872414, 0.044946510516838671},
    {0.73257903933866386, 5.497787143782138, 0.044946510516838671},
    {1.0782110208174751, 0.56653730461581664, 0.044946510516838671},
    {1.0782110208174751, 1.0042590221790799, 0.044946510516838671},
    {1.0782110208174751, 2.137333631410713, 0.044946510516838671},
    {1.0782110208174751, 2.5750553489739767, 0.044946510516838671},
    {1.0782110208174751, 3.7081299582056095, 0.044946510516838671},
    {1.0782110208174751, 4.1458516757688733, 0.044946510516838671},
    {1.0782110208174751, 5.2789262850005061, 0.044946510516838671},
    {1.0782110208174751, 5.7166480025637698, 0.044946510516838671},
    {2.0633816327723182, 0.56653730461581664, 0.044946510516838671},
    {2.0633816327723182, 1.0042590221790799, 0.044946510516838671},
    {2.0633816327723182, 2.137333631410713, 0.044946510516838671},
    {2.0633816327723182, 2.5750553489739767, 0.044946510516838671},
    {2.0633816327723182, 3.7081299582056095, 0.044946510516838671},
    {2.0633816327723182, 4.1458516757688733, 0.044946510516838671},
    {2.0633816327723182, 5.2789262850005061, 0.044946510516838671},
    {2.0633816327723182, 5.7166480025637698, 0.044946510516838671},
    {2.4090136142511294, 0.78539816339744828, 0.044946510516838671},
    {2.4090136142511294, 2.3561944901923448, 0.044946510516838671},
    {2.4090136142511294, 3.9269908169872414, 0.044946510516838671},
    {2.4090136142511294, 5.497787143782138, 0.044946510516838671},
    {0.6433798499781952, 0.43169045935612338, 0.044881302269213164},
    {0.6433798499781952, 1.1391058674387733, 0.044881302269213164},
    {0.6433798499781952, 2.00248678615102, 0.044881302269213164},
    {0.6433798499781952, 2.7099021942336696, 0.044881302269213164},
    {0.6433798499781952, 3.5732831129459166, 0.044881302269213164},
    {0.6433798499781952, 4.2806985210285662, 0.044881302269213164},
    {0.6433798499781952, 5.1440794397408132, 0.044881302269213164},
    {0.6433798499781952, 5.8514948478234627, 0.044881302269213164},
    {0.99456495332349548, 0.30400123482386271, 0.044881302269213164},
    {0.99456495332349548, 1.266795091971034, 0.044881302269213164},
    {0.99456495332349548, 1.8747975616187593, 0.044881302269213164},
    {0.99456495332349548, 2.8375914187659306, 0.044881302269213164},
    {0.99456495332349548, 3.4455938884136557, 0.044881302269213164},
    {0.99456495332349548, 4.4083877455608267, 0.044881302269213164},
    {0.99456495332349548, 5.0163902152085527, 0.044881302269213164},
    {0.99456495332349548, 5.9791840723557232, 0.044881302269213164},
    {1.3170795480588064, 0.59787568384315026, 0.044881302269213164},
    {1.3170795480588064, 0.9729206429517463, 0.044881302269213164},
    {1.3170795480588064, 2.1686720106380468, 0.044881302269213164},
    {1.3170795480588064, 2.5437169697466429, 0.044881302269213164},
    {1.3170795480588064, 3.7394683374329434, 0.044881302269213164},
    {1.3170795480588064, 4.1145132965415394, 0.044881302269213164},
    {1.3170795480588064, 5.3102646642278399, 0.044881302269213164},
    {1.3170795480588064, 5.685309623336436, 0.044881302269213164},
    {1.8245131055309869, 0.59787568384315026, 0.044881302269213164},
    {1.8245131055309869, 0.9729206429517463, 0.044881302269213164},
    {1.8245131055309869, 2.1686720106380468, 0.044881302269213164},
    {1.8245131055309869, 2.5437169697466429, 0.044881302269213164},
    {1.8245131055309869, 3.7394683374329434, 0.044881302269213164},
    {1.8245131055309869, 4.1145132965415394, 0.044881302269213164},
    {1.8245131055309869, 5.3102646642278399, 0.044881302269213164},
    {1.8245131055309869, 5.685309623336436, 0.044881302269213164},
    {2.1470277002662979, 0.30400123482386271, 0.044881302269213164},
    {2.1470277002662979, 1.266795091971034, 0.044881302269213164},
    {2.1470277002662979, 1.8747975616187593, 0.044881302269213164},
    {2.1470277002662979, 2.8375914187659306, 0.044881302269213164},
    {2.1470277002662979, 3.4455938884136557, 0.044881302269213164},
    {2.1470277002662979, 4.4083877455608267, 0.044881302269213164},
    {2.1470277002662979, 5.0163902152085527, 0.044881302269213164},
    {2.1470277002662979, 5.9791840723557232, 0.044881302269213164},
    {2.4982128036115983, 0.43169045935612338, 0.044881302269213164},
    {2.4982128036115983, 1.1391058674387733, 0.044881302269213164},
    {2.4982128036115983, 2.00248678615102, 0.044881302269213164},
    {2.4982128036115983, 2.7099021942336696, 0.044881302269213164},
    {2.4982128036115983, 3.5732831129459166, 0.044881302269213164},
    {2.4982128036115983, 4.2806985210285662, 0.044881302269213164},
    {2.4982128036115983, 5.1440794397408132, 0.044881302269213164},
    {2.4982128036115983, 5.8514948478234627, 0.044881302269213164},
    {0.52035320591770562, 0.78539816339744828, 0.043351319880953879},
    {0.52035320591770562, 2.3561944901923448, 0.043351319880953879},
    {0.52035320591770562, 3.9269908169872414, 0.043351319880953879},
    {0.52035320591770562, 5.497787143782138, 0.043351319880953879},
    {1.2115550614865087, 0.38497597169890063, 0.043351319880953879},
    {1.2115550614865087, 1.185820355095996, 0.043351319880953879},
    {1.2115550614865087, 1.9557722984937973, 0.043351319880953879},
    {1.2115550614865087, 2.7566166818908924, 0.043351319880953879},
    {1.2115550614865087, 3.5265686252886939, 0.043351319880953879},
    {1.2115550614865087, 4.3274130086857889, 0.043351319880953879},
    {1.2115550614865087, 5.0973649520835904, 0.043351319880953879},
    {1.2115550614865087, 5.8982093354806855, 0.043351319880953879},
    {1.9300375921032846, 0.38497597169890063, 0.043351319880953879},
    {1.9300375921032846, 1.185820355095996, 0.043351319880953879},
    {1.9300375921032846, 1.9557722984937973, 0.043351319880953879},
    {1.9300375921032846, 2.7566166818908924, 0.043351319880953879},
    {1.9300375921032846, 3.5265686252886939, 0.043351319880953879},
    {1.9300375921032846, 4.3274130086857889, 0.043351319880953879},
    {1.9300375921032846, 5.0973649520835904, 0.043351319880953879},
    {1.9300375921032846, 5.8982093354806855, 0.043351319880953879},
    {2.6212394476720875, 0.78539816339744828, 0.043351319880953879},
    {2.6212394476720875, 2.3561944901923448, 0.043351319880953879},
    {2.6212394476720875, 3.9269908169872414, 0.043351319880953879},
    {2.6212394476720875, 5.497787143782138, 0.043351319880953879},
    {0.44539043789722188, 0.29039656444951661, 0.042629052407721503},
    {0.44539043789722188, 1.28039976234538, 0.042629052407721503},
    {0.44539043789722188, 1.8611928912444133, 0.042629052407721503},
    {0.44539043789722188, 2.8511960891402768, 0.042629052407721503},
    {0.44539043789722188, 3.4319892180393095, 0.042629052407721503},
    {0.44539043789722188, 4.4219924159351729, 0.042629052407721503},
    {0.44539043789722188, 5.0027855448342065, 0.042629052407721503},
    {0.44539043789722188, 5.9927887427300695, 0.042629052407721503},
    {1.1453005440691766, 0.13584808813850491, 0.042629052407721503},
    {1.1453005440691766, 1.4349482386563917, 0.042629052407721503},
    {1.1453005440691766, 1.7066444149334015, 0.042629052407721503},
    {1.1453005440691766, 3.0057445654512884, 0.042629052407721503},
    {1.1453005440691766, 3.2774407417282978, 0.042629052407721503},
    {1.1453005440691766, 4.576540892246185, 0.042629052407721503},
    {1.1453005440691766, 4.8482370685231944, 0.042629052407721503},
    {1.1453005440691766, 6.1473372190410815, 0.042629052407721503},
    {1.447126475278901, 0.42898629794348531, 0.042629052407721503},
    {1.447126475278901, 1.1418100288514115, 0.042629052407721503},
    {1.447126475278901, 1.9997826247383819, 0.042629052407721503},
    {1.447126475278901, 2.712606355646308, 0.042629052407721503},
    {1.447126475278901, 3.5705789515332782, 0.042629052407721503},
    {1.447126475278901, 4.2834026824412046, 0.042629052407721503},
    {1.447126475278901, 5.1413752783281748, 0.042629052407721503},
    {1.447126475278901, 5.8541990092361011, 0.042629052407721503},
    {1.6944661783108923, 0.42898629794348531, 0.042629052407721503},
    {1.6944661783108923, 1.1418100288514115, 0.042629052407721503},
    {1.6944661783108923, 1.9997826247383819, 0.042629052407721503},
    {1.6944661783108923, 2.712606355646308, 0.042629052407721503},
    {1.6944661783108923, 3.5705789515332782, 0.042629052407721503},
    {1.6944661783108923, 4.2834026824412046, 0.042629052407721503},
    {1.6944661783108923, 5.1413752783281748, 0.042629052407721503},
    {1.6944661783108923, 5.8541990092361011, 0.042629052407721503},
    {1.9962921095206165, 0.13584808813850491, 0.042629052407721503},
    {1.9962921095206165, 1.4349482386563917, 0.042629052407721503},
    {1.9962921095206165, 1.7066444149334015, 0.042629052407721503},
    {1.9962921095206165, 3.0057445654512884, 0.042629052407721503},
    {1.9962921095206165, 3.2774407417282978, 0.042629052407721503},
    {1.9962921095206165, 4.576540892246185, 0.042629052407721503},
    {1.9962921095206165, 4.8482370685231944, 0.042629052407721503},
    {1.9962921095206165, 6.1473372190410815, 0.042629052407721503},
    {2.6962022156925713, 0.29039656444951661, 0.042629052407721503},
    {2.6962022156925713, 1.28039976234538, 0.042629052407721503},
    {2.6962022156925713, 1.8611928912444133, 0.042629052407721503},
    {2.6962022156925713, 2.8511960891402768, 0.042629052407721503},
    {2.6962022156925713, 3.4319892180393095, 0.042629052407721503},
    {2.6962022156925713, 4.4219924159351729, 0.042629052407721503},
    {2.6962022156925713, 5.0027855448342065, 0.042629052407721503},
    {2.6962022156925713, 5.9927887427300695, 0.042629052407721503},
    {0.31930339233981114, 0.78539816339744828, 0.039068257158919401},
    {0.31930339233981114, 2.3561944901923448, 0.039068257158919401},
    {0.31930339233981114, 3.9269908169872414, 0.039068257158919401},
    {0.31930339233981114, 5.497787143782138, 0.039068257158919401},
    {1.3469675338576828, 0.22965658705933822, 0.039068257158919401},
    {1.3469675338576828, 1.3411397397355584, 0.039068257158919401},
    {1.3469675338576828, 1.8004529138542349, 0.039068257158919401},
    {1.3469675338576828, 2.9119360665304552, 0.039068257158919401},
    {1.3469675338576828, 3.371249240649131, 0.039068257158919401},
    {1.3469675338576828, 4.4827323933253513, 0.039068257158919401},
    {1.3469675338576828, 4.942045567444028, 0.039068257158919401},
    {1.3469675338576828, 6.0535287201202479, 0.039068257158919401},
    {1.7946251197321106, 0.22965658705933822, 0.039068257158919401},
    {1.7946251197321106, 1.3411397397355584, 0.039068257158919401},
    {1.7946251197321106, 1.8004529138542349, 0.039068257158919401},
    {1.7946251197321106, 2.9119360665304552, 0.039068257158919401},
    {1.7946251197321106, 3.371249240649131, 0.039068257158919401},
    {1.7946251197321106, 4.4827323933253513, 0.039068257158919401},
    {1.7946251197321106, 4.942045567444028, 0.039068257158919401},
    {1.7946251197321106, 6.0535287201202479, 0.039068257158919401},
    {2.8222892612499821, 0.78539816339744828, 0.039068257158919401},
    {2.8222892612499821, 2.3561944901923448, 0.039068257158919401},
    {2.8222892612499821, 3.9269908169872414, 0.039068257158919401},
    {2.8222892612499821, 5.497787143782138, 0.039068257158919401},
    {0.26759758207687406, 0, 0.037477252107084247},
    {0.26759758207687406, 1.5707963267948966, 0.037477252107084247},
    {0.26759758207687406, 3.1415926535897931, 0.037477252107084247},
    {0.26759758207687406, 4.7123889803846897, 0.037477252107084247},
    {1.3031987447180227, 0, 0.037477252107084247},
    {1.3031987447180227, 1.5707963267948966, 0.037477252107084247},
    {1.3031987447180227, 3.1415926535897931, 0.037477252107084247},
    {1.3031987447180227, 4.7123889803846897, 0.037477252107084247},
    {1.5707963267948966, 0.26759758207687401, 0.037477252107084247},
    {1.5707963267948966, 1.3031987447180227, 0.037477252107084247},
    {1.5707963267948966, 1.8383939088717707, 0.037477252107084247},
    {1.5707963267948966, 2.873995071512919, 0.037477252107084247},
    {1.5707963267948966, 3.4091902356666672, 0.037477252107084247},
    {1.5707963267948966, 4.4447913983078156, 0.037477252107084247},
    {1.5707963267948966, 4.9799865624615638, 0.037477252107084247},
    {1.5707963267948966, 6.0155877251027121, 0.037477252107084247},
    {1.8383939088717707, 0, 0.037477252107084247},
    {1.8383939088717707, 1.5707963267948966, 0.037477252107084247},
    {1.8383939088717707, 3.1415926535897931, 0.037477252107084247},
    {1.8383939088717707, 4.7123889803846897, 0.037477252107084247},
    {2.873995071512919, 0, 0.037477252107084247},
    {2.873995071512919, 1.5707963267948966, 0.037477252107084247},
    {2.873995071512919, 3.1415926535897931, 0.037477252107084247},
    {2.873995071512919, 4.7123889803846897, 0.037477252107084247},
    {0.13644641432412793, 0.78539816339744828, 0.029557378086976182},
    {0.13644641432412793, 2.3561944901923448, 0.029557378086976182},
    {0.13644641432412793, 3.9269908169872414, 0.029557378086976182},
    {0.13644641432412793, 5.497787143782138, 0.029557378086976182},
    {1.4744643194976015, 0.096782118633563854, 0.029557378086976182},
    {1.4744643194976015, 1.4740142081613328, 0.029557378086976182},
    {1.4744643194976015, 1.6675784454284606, 0.029557378086976182},
    {1.4744643194976015, 3.0448105349562296, 0.029557378086976182},
    {1.4744643194976015, 3.2383747722233567, 0.029557378086976182},
    {1.4744643194976015, 4.6156068617511252, 0.029557378086976182},
    {1.4744643194976015, 4.8091710990182532, 0.029557378086976182},
    {1.4744643194976015, 6.1864031885460227, 0.029557378086976182},
    {1.6671283340921916, 0.096782118633563854, 0.029557378086976182},
    {1.6671283340921916, 1.4740142081613328, 0.029557378086976182},
    {1.6671283340921916, 1.6675784454284606, 0.029557378086976182},
    {1.6671283340921916, 3.0448105349562296, 0.029557378086976182},
    {1.6671283340921916, 3.2383747722233567, 0.029557378086976182},
    {1.6671283340921916, 4.6156068617511252, 0.029557378086976182},
    {1.6671283340921916, 4.8091710990182532, 0.029557378086976182},
    {1.6671283340921916, 6.1864031885460227, 0.029557378086976182},
    {3.0051462392656654, 0.78539816339744828, 0.029557378086976182},
    {3.0051462392656654, 2.3561944901923448, 0.029557378086976182},
    {3.0051462392656654, 3.9269908169872414, 0.029557378086976182},
    {3.0051462392656654, 5.497787143782138, 0.029557378086976182},
    {0, 0, 0.010739109397555787},
    {1.5707963267948966, 0, 0.010739109397555787},
    {1.5707963267948966, 1.5707963267948966, 0.010739109397555787},
    {1.5707963267948966, 3.1415926535897931, 0.010739109397555787},
    {1.5707963267948966, 4.7123889803846897, 0.010739109397555787},
    {3.1415926535897931, 0, 0.010739109397555787},
};

const std::array<LebedevTable, kLebedevTableCount> kLebedevTables = {{
    {6, 3, kLebedev6},
    {14, 5, kLebedev14},
    {26, 7, kLebedev26},
    {38, 9, kLebedev38},
    {50, 11, kLebedev50},
    {74, 13, kLebedev74},
    {86, 15, kLebedev86},
    {110, 17, kLebedev110},
    {146, 19, kLebedev146},
    {170, 21, kLebedev170},
    {194, 23, kLebedev194},
    {230, 25, kLebedev230},
    {266, 27, kLebedev266},
    {302, 29, kLebedev302},
}};

}  // namespace scatcm::detail
