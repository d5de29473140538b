/**
 * Response bodies recorded verbatim from the session service for the
 * 4-participant fixture matrix (roles IN, DE, IM, CO): create, what-if
 * previews, one committed swap, finalize. Timestamps zeroed.
 */

import { SessionBody, WhatIfBody } from "../src/api.js";

export const createBody: SessionBody = {
  "session_id": "689deaaad253443d83f01c8634cdc15c",
  "version": 0,
  "finalized": false,
  "scores": [
    [
      23,
      257,
      83,
      256
    ],
    [
      103,
      60,
      20,
      290
    ],
    [
      10,
      150,
      61,
      238
    ],
    [
      50,
      141,
      61,
      0
    ]
  ],
  "roles": [
    "IN",
    "DE",
    "IM",
    "CO"
  ],
  "labels": null,
  "assembly": [
    1,
    1,
    1,
    1
  ],
  "initial": [
    "DE",
    "IN",
    "CO",
    "IM"
  ],
  "current": [
    "DE",
    "IN",
    "CO",
    "IM"
  ],
  "swap_log": [],
  "team_scores": {
    "1": 659
  },
  "solution": {
    "participants": [
      1,
      2,
      3,
      4
    ],
    "teams": [
      {
        "id": 1,
        "members": [
          {
            "id": 1,
            "role": "DE",
            "score": 257
          },
          {
            "id": 2,
            "role": "IN",
            "score": 103
          },
          {
            "id": 3,
            "role": "CO",
            "score": 238
          },
          {
            "id": 4,
            "role": "IM",
            "score": 61
          }
        ],
        "capacity": 1803,
        "team_score": 659,
        "sigma": 130.74091746656822
      }
    ],
    "assembly": [
      1,
      1,
      1,
      1
    ],
    "roles": [
      "DE",
      "IN",
      "CO",
      "IM"
    ],
    "stage": "INITIAL",
    "config": {
      "roles": [
        "IN",
        "DE",
        "IM",
        "CO"
      ],
      "n": 1,
      "method": "draft",
      "seed": 0,
      "rule3_strict": true,
      "exhaustive_bound": 20,
      "mc": {
        "mode": "balanced",
        "epsilon": 0.01,
        "max_samples": 100000
      }
    },
    "metrics": {
      "total_capacity": 1803
    }
  }
} as SessionBody;

export const whatIfBody: WhatIfBody = {
  "team": 1,
  "new_team_scores": {
    "1": 382
  },
  "delta": -277,
  "rule3_warnings": [],
  "version": 0
};

export const whatIfWarnBody: WhatIfBody = {
  "team": 1,
  "new_team_scores": {
    "1": 421
  },
  "delta": -238,
  "rule3_warnings": [
    "rule 3: participant 4 holds role CO with a zero score"
  ],
  "version": 0
};

export const commitBody: SessionBody = {
  "session_id": "689deaaad253443d83f01c8634cdc15c",
  "version": 1,
  "finalized": false,
  "scores": [
    [
      23,
      257,
      83,
      256
    ],
    [
      103,
      60,
      20,
      290
    ],
    [
      10,
      150,
      61,
      238
    ],
    [
      50,
      141,
      61,
      0
    ]
  ],
  "roles": [
    "IN",
    "DE",
    "IM",
    "CO"
  ],
  "labels": null,
  "assembly": [
    1,
    1,
    1,
    1
  ],
  "initial": [
    "DE",
    "IN",
    "CO",
    "IM"
  ],
  "current": [
    "IN",
    "DE",
    "CO",
    "IM"
  ],
  "swap_log": [
    {
      "i": 1,
      "j": 2,
      "timestamp": 0,
      "resulting_team_score": 382
    }
  ],
  "team_scores": {
    "1": 382
  },
  "solution": {
    "participants": [
      1,
      2,
      3,
      4
    ],
    "teams": [
      {
        "id": 1,
        "members": [
          {
            "id": 1,
            "role": "IN",
            "score": 23
          },
          {
            "id": 2,
            "role": "DE",
            "score": 60
          },
          {
            "id": 3,
            "role": "CO",
            "score": 238
          },
          {
            "id": 4,
            "role": "IM",
            "score": 61
          }
        ],
        "capacity": 1803,
        "team_score": 382,
        "sigma": 130.74091746656822
      }
    ],
    "assembly": [
      1,
      1,
      1,
      1
    ],
    "roles": [
      "IN",
      "DE",
      "CO",
      "IM"
    ],
    "stage": "INITIAL",
    "config": {
      "roles": [
        "IN",
        "DE",
        "IM",
        "CO"
      ],
      "n": 1,
      "method": "draft",
      "seed": 0,
      "rule3_strict": true,
      "exhaustive_bound": 20,
      "mc": {
        "mode": "balanced",
        "epsilon": 0.01,
        "max_samples": 100000
      }
    },
    "metrics": {
      "total_capacity": 1803
    }
  }
} as SessionBody;

export const afterCommitBody: SessionBody = {
  "session_id": "689deaaad253443d83f01c8634cdc15c",
  "version": 1,
  "finalized": false,
  "scores": [
    [
      23,
      257,
      83,
      256
    ],
    [
      103,
      60,
      20,
      290
    ],
    [
      10,
      150,
      61,
      238
    ],
    [
      50,
      141,
      61,
      0
    ]
  ],
  "roles": [
    "IN",
    "DE",
    "IM",
    "CO"
  ],
  "labels": null,
  "assembly": [
    1,
    1,
    1,
    1
  ],
  "initial": [
    "DE",
    "IN",
    "CO",
    "IM"
  ],
  "current": [
    "IN",
    "DE",
    "CO",
    "IM"
  ],
  "swap_log": [
    {
      "i": 1,
      "j": 2,
      "timestamp": 0,
      "resulting_team_score": 382
    }
  ],
  "team_scores": {
    "1": 382
  },
  "solution": {
    "participants": [
      1,
      2,
      3,
      4
    ],
    "teams": [
      {
        "id": 1,
        "members": [
          {
            "id": 1,
            "role": "IN",
            "score": 23
          },
          {
            "id": 2,
            "role": "DE",
            "score": 60
          },
          {
            "id": 3,
            "role": "CO",
            "score": 238
          },
          {
            "id": 4,
            "role": "IM",
            "score": 61
          }
        ],
        "capacity": 1803,
        "team_score": 382,
        "sigma": 130.74091746656822
      }
    ],
    "assembly": [
      1,
      1,
      1,
      1
    ],
    "roles": [
      "IN",
      "DE",
      "CO",
      "IM"
    ],
    "stage": "INITIAL",
    "config": {
      "roles": [
        "IN",
        "DE",
        "IM",
        "CO"
      ],
      "n": 1,
      "method": "draft",
      "seed": 0,
      "rule3_strict": true,
      "exhaustive_bound": 20,
      "mc": {
        "mode": "balanced",
        "epsilon": 0.01,
        "max_samples": 100000
      }
    },
    "metrics": {
      "total_capacity": 1803
    }
  }
} as SessionBody;

export const finalizeBody: SessionBody = {
  "session_id": "689deaaad253443d83f01c8634cdc15c",
  "version": 2,
  "finalized": true,
  "scores": [
    [
      23,
      257,
      83,
      256
    ],
    [
      103,
      60,
      20,
      290
    ],
    [
      10,
      150,
      61,
      238
    ],
    [
      50,
      141,
      61,
      0
    ]
  ],
  "roles": [
    "IN",
    "DE",
    "IM",
    "CO"
  ],
  "labels": null,
  "assembly": [
    1,
    1,
    1,
    1
  ],
  "initial": [
    "DE",
    "IN",
    "CO",
    "IM"
  ],
  "current": [
    "IN",
    "DE",
    "CO",
    "IM"
  ],
  "swap_log": [
    {
      "i": 1,
      "j": 2,
      "timestamp": 0,
      "resulting_team_score": 382
    }
  ],
  "team_scores": {
    "1": 382
  },
  "solution": {
    "participants": [
      1,
      2,
      3,
      4
    ],
    "teams": [
      {
        "id": 1,
        "members": [
          {
            "id": 1,
            "role": "IN",
            "score": 23
          },
          {
            "id": 2,
            "role": "DE",
            "score": 60
          },
          {
            "id": 3,
            "role": "CO",
            "score": 238
          },
          {
            "id": 4,
            "role": "IM",
            "score": 61
          }
        ],
        "capacity": 1803,
        "team_score": 382,
        "sigma": 130.74091746656822
      }
    ],
    "assembly": [
      1,
      1,
      1,
      1
    ],
    "roles": [
      "IN",
      "DE",
      "CO",
      "IM"
    ],
    "stage": "FINAL",
    "config": {
      "roles": [
        "IN",
        "DE",
        "IM",
        "CO"
      ],
      "n": 1,
      "method": "draft",
      "seed": 0,
      "rule3_strict": true,
      "exhaustive_bound": 20,
      "mc": {
        "mode": "balanced",
        "epsilon": 0.01,
        "max_samples": 100000
      }
    },
    "metrics": {
      "total_capacity": 1803
    }
  }
} as SessionBody;
